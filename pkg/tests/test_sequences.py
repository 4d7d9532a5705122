import math

import pytest

from fermatlab.arith import FermatModulus, OpCounter, fermat_value, reduce_mod_fermat
from fermatlab.budget import BudgetExceededError
from fermatlab.sequences import (
    ASequenceCursor,
    a_exact,
    a_mod_fermat,
    a_next_mod,
    overlap_check,
    s_value,
)


def test_a_exact_fixtures():
    assert a_exact(1) == 6
    assert a_exact(2) == 34
    assert a_exact(3) == 1154
    assert a_exact(4) == 1331714


def test_a_exact_rejects_index_zero():
    with pytest.raises(ValueError):
        a_exact(0)


def test_a_exact_budget():
    with pytest.raises(BudgetExceededError):
        a_exact(100)


def test_a_exact_is_even_and_strictly_increasing():
    terms = [a_exact(q) for q in range(1, 15)]
    assert all(t % 2 == 0 for t in terms)
    assert all(a < b for a, b in zip(terms, terms[1:]))


def test_a_next_mod_examples():
    m2, m3 = FermatModulus(2), FermatModulus(3)
    assert a_next_mod(reduce_mod_fermat(6, m2)).value == 0  # 34 = 2 * 17
    assert a_next_mod(reduce_mod_fermat(0, m3)).value == 255  # 0 - 2 wraps
    # Exact-remainder oracle: 197**2 - 2 = 38807 = 151 * 257, so the step hits zero.
    assert (197 * 197 - 2) % 257 == 0
    assert a_next_mod(reduce_mod_fermat(197, m3)).value == 0


def test_a_next_mod_counts_one_squaring():
    counter = OpCounter()
    a_next_mod(reduce_mod_fermat(6, FermatModulus(2)), counter)
    assert counter.squarings == 1 and counter.multiplications == 0


def test_a_mod_fermat_examples():
    assert a_mod_fermat(2, 2).value == 0
    assert a_mod_fermat(3, 3).value == 126
    assert a_mod_fermat(5, 3).value == 0


def test_a_mod_fermat_rejects_index_zero():
    with pytest.raises(ValueError):
        a_mod_fermat(0, 2)


def test_a_mod_fermat_matches_exact_remainder():
    for n in range(0, 7):
        value = fermat_value(n)
        for q in range(1, 15):
            assert a_mod_fermat(q, n).value == a_exact(q) % value


def test_a_mod_fermat_squaring_count():
    for q in (1, 2, 5, 9):
        counter = OpCounter()
        a_mod_fermat(q, 4, counter)
        assert counter.squarings == q - 1


def test_cursor_walks_the_residue_stream():
    cursor = ASequenceCursor(FermatModulus(3))
    seen = [cursor.residue.value]
    for _ in range(4):
        seen.append(cursor.advance().value)
    assert seen == [6, 34, 126, 197, 0]
    assert cursor.q == 5


def test_s_value_fixtures():
    assert s_value(1) == 3
    assert s_value(2) == 17
    assert s_value(3) == 577
    assert 2 * s_value(4) == a_exact(4)


def test_gcd_of_distinct_terms_is_two():
    terms = [a_exact(q) for q in range(1, 13)]
    for i in range(len(terms)):
        for j in range(i + 1, len(terms)):
            assert math.gcd(terms[i], terms[j]) == 2


def test_overlap_examples():
    assert overlap_check(1).ok
    assert overlap_check(4).ok  # 65537 < 1331714 < 4294967297
    report = overlap_check(12)
    assert report.n_max == 12 and report.violations == []


def test_overlap_rejects_bad_bound():
    with pytest.raises(ValueError):
        overlap_check(0)


def test_overlap_budget():
    with pytest.raises(BudgetExceededError):
        overlap_check(30)
