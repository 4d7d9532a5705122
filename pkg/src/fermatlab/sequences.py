"""The squaring recurrence 6, 34, 1154, ... exactly and modulo 2**(2**n) + 1."""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import FermatModulus, FermatResidue, Natural, OpCounter, reduce_mod_fermat, square_mod
from .budget import check_pow2_bits


def a_exact(q: int) -> Natural:
    """Exact q-th term: starts at 6, each term is the square of the previous minus 2."""
    if q < 1:
        raise ValueError(f"the sequence starts at index 1, got {q}")
    check_pow2_bits(q - 1, f"exact term {q}")
    x = 6
    for _ in range(q - 1):
        x = x * x - 2
    return x


def a_next_mod(r: FermatResidue, counter: OpCounter | None = None) -> FermatResidue:
    """One recurrence step on residues: square, then subtract 2 with wraparound."""
    s = square_mod(r, counter)
    value = s.value - 2
    if value < 0:
        value += s.modulus.value
    return FermatResidue(s.modulus, value)


def a_mod_fermat(q: int, n: int, counter: OpCounter | None = None) -> FermatResidue:
    """The q-th term mod 2**(2**n) + 1, via q - 1 squaring steps from 6."""
    if q < 1:
        raise ValueError(f"the sequence starts at index 1, got {q}")
    r = reduce_mod_fermat(6, FermatModulus(n))
    for _ in range(q - 1):
        r = a_next_mod(r, counter)
    return r


def s_value(q: int) -> Natural:
    """Half of the exact q-th term (every term is even)."""
    x = a_exact(q)
    assert x & 1 == 0
    return x >> 1


class ASequenceCursor:
    """Sequential walk of the residues for one modulus; starts at index 1."""

    __slots__ = ("q", "residue", "_counter")

    def __init__(self, modulus: FermatModulus, counter: OpCounter | None = None) -> None:
        self.q = 1
        self.residue = reduce_mod_fermat(6, modulus)
        self._counter = counter

    def advance(self) -> FermatResidue:
        self.residue = a_next_mod(self.residue, self._counter)
        self.q += 1
        return self.residue


@dataclass
class OverlapReport:
    """Indices where the strict sandwich F_n < A_n < F_{n+1} failed (expected none)."""

    n_max: int
    violations: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def overlap_check(n_max: int) -> OverlapReport:
    """Exact-integer check that each term sits strictly between consecutive moduli."""
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    report = OverlapReport(n_max)
    lower = FermatModulus(1).value
    for n in range(1, n_max + 1):
        upper = FermatModulus(n + 1).value
        term = a_exact(n)
        if not lower < term < upper:
            report.violations.append(n)
        lower = upper
    return report
