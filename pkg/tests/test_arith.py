import random

import pytest
from hypothesis import given, strategies as st

from fermatlab.arith import (
    FermatModulus,
    FermatResidue,
    ModulusMismatchError,
    OpCounter,
    add_mod,
    fermat_value,
    mul_mod,
    pow_mod,
    reduce_mod_fermat,
    square_mod,
)
from fermatlab.budget import BudgetExceededError


def test_fermat_value_fixtures():
    assert [fermat_value(n) for n in range(6)] == [3, 5, 17, 257, 65537, 4294967297]
    assert fermat_value(5) == 641 * 6700417


def test_modulus_fields():
    m = FermatModulus(3)
    assert m.n == 3 and m.b == 8 and m.value == 257


def test_modulus_rejects_negative_index():
    with pytest.raises(ValueError):
        FermatModulus(-1)


def test_modulus_budget():
    assert FermatModulus(16).b == 65536  # the largest the default budget admits
    with pytest.raises(BudgetExceededError):
        fermat_value(17)  # needs 2**17 bits, default budget is 2**16
    with pytest.raises(BudgetExceededError):
        fermat_value(10**18)  # guard must not try to materialize this


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("FERMATLAB_MAX_BITS", "16")
    with pytest.raises(BudgetExceededError):
        fermat_value(5)
    assert fermat_value(4) == 65537


def test_reduce_examples():
    m = FermatModulus(2)
    assert reduce_mod_fermat(17, m).value == 0  # the modulus itself
    assert reduce_mod_fermat(257, m).value == 2  # one fold: 1 - 16, fixed up
    assert reduce_mod_fermat(34, m).value == 0


def test_reduce_rejects_negative():
    with pytest.raises(ValueError):
        reduce_mod_fermat(-1, FermatModulus(2))


@pytest.mark.parametrize("n", range(2, 11))
def test_reduce_matches_generic_remainder(n):
    # Folding vs the builtin remainder, 1000 samples per modulus up to F_n**2.
    m = FermatModulus(n)
    rng = random.Random(1000 + n)
    square = m.value * m.value
    for _ in range(1000):
        x = rng.randrange(square + 1)
        assert reduce_mod_fermat(x, m).value == x % m.value


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_reduce_handles_inputs_far_beyond_square(n):
    m = FermatModulus(n)
    rng = random.Random(77 + n)
    for _ in range(50):
        x = rng.randrange(m.value ** 5)
        assert reduce_mod_fermat(x, m).value == x % m.value


def test_residue_canonical_range_enforced():
    m = FermatModulus(2)
    with pytest.raises(ValueError):
        FermatResidue(m, 17)
    with pytest.raises(ValueError):
        FermatResidue(m, -1)


def test_mul_examples():
    m = FermatModulus(2)
    six = reduce_mod_fermat(6, m)
    one = reduce_mod_fermat(1, m)
    zero = reduce_mod_fermat(0, m)
    assert mul_mod(six, six).value == 2  # 36 mod 17
    assert mul_mod(six, one) == six
    assert mul_mod(zero, six) == zero


def test_mul_modulus_mismatch():
    a = reduce_mod_fermat(3, FermatModulus(2))
    b = reduce_mod_fermat(3, FermatModulus(3))
    with pytest.raises(ModulusMismatchError):
        mul_mod(a, b)
    with pytest.raises(ModulusMismatchError):
        add_mod(a, b)


def test_square_examples():
    m2, m3 = FermatModulus(2), FermatModulus(3)
    assert square_mod(reduce_mod_fermat(6, m2)).value == 2
    assert square_mod(reduce_mod_fermat(0, m3)).value == 0
    # 197**2 = 38809 = 151*257 + 2 by the exact-remainder oracle.
    assert 38809 % 257 == 2
    assert square_mod(reduce_mod_fermat(197, m3)).value == 2


def test_square_counts_squarings_not_multiplications():
    counter = OpCounter()
    a = reduce_mod_fermat(5, FermatModulus(3))
    square_mod(a, counter)
    mul_mod(a, a, counter)
    assert counter.squarings == 1
    assert counter.multiplications == 1


_SMALL_N = st.sampled_from([2, 3, 4, 5])


@given(n=_SMALL_N, x=st.integers(min_value=0), y=st.integers(min_value=0), z=st.integers(min_value=0))
def test_ring_laws(n, x, y, z):
    m = FermatModulus(n)
    a, b, c = (reduce_mod_fermat(v, m) for v in (x, y, z))
    assert mul_mod(a, b) == mul_mod(b, a)
    assert mul_mod(mul_mod(a, b), c) == mul_mod(a, mul_mod(b, c))
    assert mul_mod(a, add_mod(b, c)) == add_mod(mul_mod(a, b), mul_mod(a, c))


@given(n=_SMALL_N, x=st.integers(min_value=0))
def test_square_equals_self_multiplication(n, x):
    a = reduce_mod_fermat(x, FermatModulus(n))
    assert square_mod(a) == mul_mod(a, a)


def test_pow_examples():
    m = FermatModulus(2)
    three = reduce_mod_fermat(3, m)
    assert pow_mod(three, 8).value == 16  # 3**8 = 6561, one short of a full cycle
    assert pow_mod(three, 0).value == 1
    assert pow_mod(three, 1) == three


def test_pow_rejects_negative_exponent():
    with pytest.raises(ValueError):
        pow_mod(reduce_mod_fermat(3, FermatModulus(2)), -1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_pow_addition_law(n):
    m = FermatModulus(n)
    rng = random.Random(9 + n)
    for _ in range(50):
        base = reduce_mod_fermat(rng.randrange(m.value), m)
        e1, e2 = rng.randrange(64), rng.randrange(64)
        assert pow_mod(base, e1 + e2) == mul_mod(pow_mod(base, e1), pow_mod(base, e2))


@pytest.mark.parametrize("m_exp", [0, 1, 2, 3, 7, 12])
def test_pow_of_two_exponent_costs_only_squarings(m_exp):
    counter = OpCounter()
    base = reduce_mod_fermat(3, FermatModulus(4))
    pow_mod(base, 1 << m_exp, counter)
    assert counter.squarings == m_exp
    assert counter.multiplications == 0


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_pow_matches_builtin(n):
    m = FermatModulus(n)
    rng = random.Random(31 + n)
    for _ in range(100):
        b = rng.randrange(m.value)
        e = rng.randrange(1 << 16)
        assert pow_mod(reduce_mod_fermat(b, m), e).value == pow(b, e, m.value)
