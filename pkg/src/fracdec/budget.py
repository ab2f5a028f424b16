"""Enumeration budget for brute-force oracles.

The cap is read from the FRACDEC_BUDGET environment variable at call time so
tests and scripts can tighten or relax it without re-importing anything.
"""

import os

from .errors import BudgetExceeded

DEFAULT_BUDGET = 1_000_000


def enumeration_budget() -> int:
    raw = os.environ.get("FRACDEC_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    value = int(raw)
    if value <= 0:
        raise ValueError("FRACDEC_BUDGET must be a positive integer")
    return value


def check_budget(size: int, what: str) -> None:
    budget = enumeration_budget()
    if size > budget:
        raise BudgetExceeded(
            f"{what} needs {size} enumeration steps, budget is {budget} "
            "(set FRACDEC_BUDGET to raise it)"
        )
