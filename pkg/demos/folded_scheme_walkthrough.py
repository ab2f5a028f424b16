"""
Prefix downloads from a folded Reed-Solomon code
================================================

Columns hold l consecutive evaluations of one low-degree polynomial at
powers of a primitive element. Asking each column for just its first
alpha*l entries leaves a punctured code that is still MDS, so trial
decoding recovers the message while reading nothing outside the prefixes:
downloaded symbols equal accessed symbols, there is no access overhead.
"""

from fractions import Fraction

from fracdec.arraycode import ErrorPattern, apply_error_pattern
from fracdec.frs_scheme import (frs_decode_trial, frs_download_all,
                                frs_encode, frs_make_config)

cfg = frs_make_config(8, 3, 4, Fraction(3, 4))
print(f"p={cfg.field.q} gamma={cfg.gamma} n={cfg.n} k={cfg.k} l={cfg.l} "
      f"alpha={cfg.alpha}")
print(f"radius {cfg.radius} from 3-of-4 prefixes "
      f"(naive 6-whole-column reading would give radius 1)")

message = tuple(range(1, 13))            # 12 coefficients, degree < kl
stored = frs_encode(cfg, message)
print("\ncolumn 2 holds", stored[2], "at points", cfg.column_points(2))

pattern = ErrorPattern(support=(1, 6),
                       values=((5, 0, 0, 0), (1, 2, 3, 4)))
received = apply_error_pattern(cfg.field, stored, pattern)

bundle = frs_download_all(cfg, received)
print(f"downloaded = accessed = {bundle.downloaded} symbols")

decoded, corrected = frs_decode_trial(cfg, bundle.per_column)
print("decoded message:", decoded)
print("columns the decoder discarded:", sorted(corrected))
assert decoded == message

# corruption that never enters a served prefix is invisible by design
tail_only = ErrorPattern(support=(0, 3, 5), values=(((0, 0, 0, 9),) * 3))
received = apply_error_pattern(cfg.field, stored, tail_only)
decoded, corrected = frs_decode_trial(
    cfg, frs_download_all(cfg, received).per_column)
assert decoded == message and not corrected
print("\ntail-only corruption in 3 columns: decode unaffected, "
      "nothing discarded")
