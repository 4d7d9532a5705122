#!/usr/bin/env python3
"""A walk through the moduli 2^(2^n) + 1 and the folding reduction.

Everything in the library is an exact Python integer.  The one trick worth
seeing up close is how a remainder modulo 2^b + 1 is computed without a
single division: because 2^b = -1 there, a number splits into b-bit halves
whose difference is congruent to it.
"""

try:
    import fermatlab  # noqa: F401
except ImportError:
    import pathlib
    import sys

    sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from fermatlab import FermatModulus, OpCounter, fermat_value, pow_mod, reduce_mod_fermat, square_mod

print("The tower of moduli grows doubly exponentially:")
for n in range(6):
    print(f"  F_{n} = 2^(2^{n}) + 1 = {fermat_value(n)}")

print()
print("Folding reduction, step by step, for 257 mod F_2 = 17:")
print("  257 = 16*16 + 1, so hi = 16 and lo = 1")
print("  lo - hi = -15, negative, so flip and fix up: 17 - 15 = 2")
m = FermatModulus(2)
print(f"  reduce_mod_fermat(257, F_2) = {reduce_mod_fermat(257, m).value}")
assert reduce_mod_fermat(257, m).value == 257 % 17

print()
print("The modulus itself folds to zero, and giant inputs just fold repeatedly:")
print(f"  F_2 mod F_2          = {reduce_mod_fermat(17, m).value}")
big = 17**9 + 5
print(f"  (17^9 + 5) mod F_2   = {reduce_mod_fermat(big, m).value}  (check: {big % 17})")

print()
print("Squarings are counted, because both primality tests below are priced in them:")
counter = OpCounter()
r = reduce_mod_fermat(3, FermatModulus(4))
pow_mod(r, 1 << 10, counter)
print(f"  3^(2^10) mod F_4 costs {counter.squarings} squarings, {counter.multiplications} multiplications")

counter = OpCounter()
r = reduce_mod_fermat(6, FermatModulus(4))
for _ in range(5):
    r = square_mod(r, counter)
print(f"  five explicit squarings were counted as {counter.squarings}")
