"""Exact primality experiments on the numbers 2**(2**n) + 1.

The library pairs a divisibility scan of the squaring recurrence
6, 34, 1154, ... against the classical base-3 criterion, keeps every
integer exact, and counts the squarings both tests spend so they can be
compared honestly.  An exact layer for the ring of integers with sqrt(2)
verifies the identities that justify the scan.
"""

from .arith import (
    FermatModulus,
    FermatResidue,
    ModulusMismatchError,
    Natural,
    OpCounter,
    add_mod,
    fermat_value,
    mul_mod,
    pow_mod,
    reduce_mod_fermat,
    square_mod,
)
from .budget import DEFAULT_MAX_BITS, ENV_MAX_BITS, BudgetExceededError, max_bits
from .primality import (
    FactorWitness,
    NotApplicableError,
    ScanResult,
    TestReport,
    Verdict,
    VerdictKind,
    cross_check,
    h_min,
    paper_scan,
    pepin_test,
    trial_factor_search,
    verify_two_order,
)
from .sequences import (
    ASequenceCursor,
    OverlapReport,
    a_exact,
    a_mod_fermat,
    a_next_mod,
    overlap_check,
    s_value,
)
from .zsqrt2 import (
    U,
    UNITS,
    V,
    UnitPair,
    ZSqrt2,
    congruent_mod,
    frobenius_check,
    mul,
    pow_mod_p,
    reduce_mod,
    trace_pow2,
)

__version__ = "0.1.0"

__all__ = [
    "ASequenceCursor",
    "BudgetExceededError",
    "DEFAULT_MAX_BITS",
    "ENV_MAX_BITS",
    "FactorWitness",
    "FermatModulus",
    "FermatResidue",
    "ModulusMismatchError",
    "Natural",
    "NotApplicableError",
    "OpCounter",
    "OverlapReport",
    "ScanResult",
    "TestReport",
    "U",
    "UNITS",
    "UnitPair",
    "V",
    "Verdict",
    "VerdictKind",
    "ZSqrt2",
    "a_exact",
    "a_mod_fermat",
    "a_next_mod",
    "add_mod",
    "congruent_mod",
    "cross_check",
    "fermat_value",
    "frobenius_check",
    "h_min",
    "max_bits",
    "mul",
    "mul_mod",
    "overlap_check",
    "paper_scan",
    "pepin_test",
    "pow_mod",
    "pow_mod_p",
    "reduce_mod",
    "reduce_mod_fermat",
    "s_value",
    "square_mod",
    "trace_pow2",
    "trial_factor_search",
    "verify_two_order",
]
