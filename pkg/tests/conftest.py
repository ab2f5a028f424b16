"""Shared pytest plumbing for the acceptance suite.

Each acceptance test records exactly one PASS/FAIL line through the
`criterion` fixture; the lines are echoed in a summary section after the
run so the verdict per criterion is visible without -s.
"""

import pytest

_criterion_lines = []


@pytest.fixture
def criterion():
    """Record one acceptance-criterion outcome, then assert it."""

    def record(number, passed, detail):
        line = f"CRITERION {number} {'PASS' if passed else 'FAIL'}: {detail}"
        _criterion_lines.append(line)
        print(line)
        assert passed, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_criterion_lines):
            terminalreporter.write_line(line)
