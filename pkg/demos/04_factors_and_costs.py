#!/usr/bin/env python3
"""Divisor witnesses and what the two tests cost in squarings.

Any odd prime divisor of F_n has the shape k * 2^(n+2) + 1, which makes a
small trial search a cheap source of independent compositeness witnesses.
The cost comparison at the end is the practical story: the scan's window
saves one squaring over the oracle, both growing as 2^n.
"""

try:
    import fermatlab  # noqa: F401
except ImportError:
    import pathlib
    import sys

    sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

import time

from fermatlab import cross_check, fermat_value, trial_factor_search

print("Trial search over candidates k * 2^(n+2) + 1:")
for n in (5, 6, 9, 11, 12):
    witness = trial_factor_search(n, 2000)
    if witness is None:
        print(f"  F_{n}: none up to k = 2000")
        continue
    digits = len(str(witness.cofactor))
    print(f"  F_{n} = {witness.factor} x cofactor of {digits} digits   (k = {witness.k})")
    assert witness.factor * witness.cofactor == fermat_value(n)

print()
print("Squaring counts and wall times, oracle vs scan:")
print(f"  {'n':>2}  {'oracle sq':>9}  {'scan sq':>8}  {'oracle ms':>9}  {'scan ms':>8}")
start = time.perf_counter()
for n in range(2, 13):
    report = cross_check(n)
    print(
        f"  {n:>2}  {report.squarings_pepin:>9}  {report.squarings_scan:>8}"
        f"  {report.elapsed_ms_pepin:>9.2f}  {report.elapsed_ms_scan:>8.2f}"
    )
print(f"  total {time.perf_counter() - start:.2f}s for the sweep")
