"""Primality procedures for the moduli 2**(2**n) + 1.

Two independent routes are implemented and cross-checked:

* :func:`pepin_test` is the classical oracle, a single modular
  exponentiation with base 3.
* :func:`paper_scan` walks the squaring recurrence 6, 34, 1154, ... looking
  for a term divisible by the modulus.  Absence of such a term inside the
  proven window certifies compositeness; presence of one is only a primality
  *witness*, because the converse direction is an open conjecture.  The scan
  therefore never labels anything prime on its own.

The applicability floor is n >= 2: for n = 1 the divisibility statement
fails literally (neither 6 nor 34 is divisible by 5 although 5 is prime),
and for n = 0 the scan window is degenerate.
"""

from __future__ import annotations

import enum
import hashlib
import time
from dataclasses import dataclass

from .arith import (
    FermatModulus,
    Natural,
    OpCounter,
    fermat_value,
    pow_mod,
    reduce_mod_fermat,
)
from .sequences import ASequenceCursor

TRACE_HASH_ALGORITHM = "sha256"


class NotApplicableError(ValueError):
    """The requested index is below the procedure's applicability floor."""


class VerdictKind(enum.Enum):
    PRIME_BY_PEPIN = "PrimeByPepin"
    COMPOSITE_BY_PEPIN = "CompositeByPepin"
    COMPOSITE_CERTIFIED = "CompositeCertified"
    DIVISOR_WITNESS_FOUND = "DivisorWitnessFound"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class Verdict:
    """Outcome of one primality procedure.

    ``DivisorWitnessFound`` carries the witness index q and deliberately does
    not claim primality; ``CompositeCertified`` is the contrapositive of the
    proven direction (no witness in the window).
    """

    kind: VerdictKind
    q: int | None = None
    reason: str | None = None

    @classmethod
    def prime_by_pepin(cls) -> "Verdict":
        return cls(VerdictKind.PRIME_BY_PEPIN)

    @classmethod
    def composite_by_pepin(cls) -> "Verdict":
        return cls(VerdictKind.COMPOSITE_BY_PEPIN)

    @classmethod
    def composite_certified(cls) -> "Verdict":
        return cls(VerdictKind.COMPOSITE_CERTIFIED)

    @classmethod
    def divisor_witness(cls, q: int) -> "Verdict":
        if q < 1:
            raise ValueError(f"witness index must be positive, got {q}")
        return cls(VerdictKind.DIVISOR_WITNESS_FOUND, q=q)

    @classmethod
    def not_applicable(cls, reason: str) -> "Verdict":
        return cls(VerdictKind.NOT_APPLICABLE, reason=reason)

    @property
    def label(self) -> str:
        return self.kind.value


@dataclass(frozen=True)
class ScanResult:
    """What one recurrence scan saw.

    ``anomalies`` lists indices below the window floor whose residue was
    zero; any entry would contradict the interleaving bound and is recorded
    rather than silently dropped.  ``residue_trace_hash`` digests the whole
    residue stream (fixed-width little-endian values, sha256) so a long scan
    can be replayed and compared elsewhere.
    """

    n: int
    window: tuple[int, int]
    found_q: int | None
    residue_trace_hash: str
    squarings: int
    anomalies: tuple[int, ...] = ()


@dataclass(frozen=True)
class FactorWitness:
    """A proper divisor k * 2**(n+2) + 1 of the modulus, with its cofactor."""

    k: int
    factor: Natural
    cofactor: Natural


@dataclass(frozen=True)
class TestReport:
    """Both procedures on one modulus, with agreement flag and instrumentation."""

    __test__ = False  # keeps pytest from collecting this despite the name

    n: int
    pepin: Verdict
    paper: Verdict
    consistent: bool
    squarings_pepin: int
    squarings_scan: int
    elapsed_ms_pepin: float
    elapsed_ms_scan: float
    scan: ScanResult


def pepin_test(n: int, counter: OpCounter | None = None) -> Verdict:
    """Classical criterion: prime iff 3**((F_n - 1)/2) = -1 (mod F_n).

    Costs exactly 2**n - 1 counted squarings (the exponent is a power of
    two, so square-and-multiply never multiplies).
    """
    if n < 1:
        raise NotApplicableError(f"the base-3 criterion applies from index 1, got n={n}")
    m = FermatModulus(n)
    base = reduce_mod_fermat(3, m)
    result = pow_mod(base, (m.value - 1) >> 1, counter)
    if result.value == m.value - 1:
        return Verdict.prime_by_pepin()
    return Verdict.composite_by_pepin()


def _residue_width_bytes(m: FermatModulus) -> int:
    # Fixed width so the trace encoding is canonical; 2**b fits in b//8+1 bytes.
    return m.b // 8 + 1


def paper_scan(n: int, full_window: bool = False, counter: OpCounter | None = None) -> ScanResult:
    """Scan the recurrence residues for a zero.

    The default window is n <= q < 2**n, the tightened range that the
    interleaving bound allows; ``full_window`` widens it to 1 <= q <= 2**n
    for empirical comparison.  Iteration always starts at index 1, and a zero
    seen below the window floor is recorded as an anomaly instead of a hit.
    Early exit at q costs exactly q - 1 squarings.
    """
    if n < 2:
        raise NotApplicableError(
            f"the divisibility scan is meaningful only for n >= 2, got n={n}"
        )
    m = FermatModulus(n)
    if full_window:
        q_lo, q_hi = 1, (1 << n) + 1
    else:
        q_lo, q_hi = n, 1 << n
    if counter is None:
        counter = OpCounter()
    squarings_before = counter.squarings

    width = _residue_width_bytes(m)
    trace = hashlib.new(TRACE_HASH_ALGORITHM)
    cursor = ASequenceCursor(m, counter)
    trace.update(cursor.residue.value.to_bytes(width, "little"))

    found_q: int | None = None
    anomalies: list[int] = []
    if cursor.residue.value == 0 and q_lo <= 1:
        found_q = 1
    while found_q is None and cursor.q < q_hi - 1:
        residue = cursor.advance()
        trace.update(residue.value.to_bytes(width, "little"))
        if residue.value == 0:
            if cursor.q >= q_lo:
                found_q = cursor.q
            else:
                anomalies.append(cursor.q)
    return ScanResult(
        n=n,
        window=(q_lo, q_hi),
        found_q=found_q,
        residue_trace_hash=f"{TRACE_HASH_ALGORITHM}:{trace.hexdigest()}",
        squarings=counter.squarings - squarings_before,
        anomalies=tuple(anomalies),
    )


def h_min(n: int) -> int | None:
    """Smallest index j <= 2**n + 1 whose residue is 2, or None.

    When the modulus is prime this minimum m exists with m >= 3, and the
    term two steps earlier is divisible by the modulus; the test suite
    asserts both, instantiating the argument behind the scan.
    """
    if n < 2:
        raise NotApplicableError(f"the minimum-index machinery needs n >= 2, got n={n}")
    limit = (1 << n) + 1
    cursor = ASequenceCursor(FermatModulus(n))
    while True:
        if cursor.residue.value == 2:
            return cursor.q
        if cursor.q >= limit:
            return None
        cursor.advance()


def verify_two_order(n: int) -> bool:
    """Check 2**(2**(n+1)) = 1 (mod F_n); holds for every n by construction."""
    m = FermatModulus(n)
    two = reduce_mod_fermat(2, m)
    return pow_mod(two, 1 << (n + 1)).value == 1


def trial_factor_search(n: int, k_max: int) -> FactorWitness | None:
    """Smallest k <= k_max with k * 2**(n+2) + 1 a proper divisor of F_n.

    Candidates are screened with a cheap power test (a divisor must send
    2**(2**n) to -1); a hit is verified by exact division.
    """
    if n < 2:
        raise ValueError(f"factor search needs n >= 2, got {n}")
    if k_max < 1:
        raise ValueError(f"need a positive search bound, got {k_max}")
    value = fermat_value(n)
    exponent = 1 << n
    for k in range(1, k_max + 1):
        candidate = (k << (n + 2)) + 1
        if candidate >= value:
            return None
        if pow(2, exponent, candidate) == candidate - 1:
            cofactor, remainder = divmod(value, candidate)
            assert remainder == 0
            return FactorWitness(k=k, factor=candidate, cofactor=cofactor)
    return None


def cross_check(n: int) -> TestReport:
    """Run both procedures on one modulus and compare their verdicts.

    Agreement means: prime by the oracle exactly when the scan found a
    witness, and composite by the oracle exactly when the scan certified
    compositeness.  A disagreement would be a headline finding.
    """
    if n < 2:
        raise NotApplicableError(f"cross-checking needs n >= 2, got n={n}")
    pepin_counter = OpCounter()
    t0 = time.perf_counter()
    pepin = pepin_test(n, pepin_counter)
    t1 = time.perf_counter()
    scan = paper_scan(n)
    t2 = time.perf_counter()

    if scan.found_q is not None:
        paper = Verdict.divisor_witness(scan.found_q)
    else:
        paper = Verdict.composite_certified()
    consistent = (
        (pepin.kind is VerdictKind.PRIME_BY_PEPIN)
        == (paper.kind is VerdictKind.DIVISOR_WITNESS_FOUND)
    ) and (
        (pepin.kind is VerdictKind.COMPOSITE_BY_PEPIN)
        == (paper.kind is VerdictKind.COMPOSITE_CERTIFIED)
    )
    return TestReport(
        n=n,
        pepin=pepin,
        paper=paper,
        consistent=consistent,
        squarings_pepin=pepin_counter.squarings,
        squarings_scan=scan.squarings,
        elapsed_ms_pepin=(t1 - t0) * 1000.0,
        elapsed_ms_scan=(t2 - t1) * 1000.0,
        scan=scan,
    )
