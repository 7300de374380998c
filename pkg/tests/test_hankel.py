import itertools
import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stieltjes_string import DiscreteMeasure, MomentSequence
from stieltjes_string.errors import InconsistentMomentData
from stieltjes_string.hankel import (
    HankelTable,
    det_exact,
    hankel_matrix,
    hankel_table,
    hankel_table_float,
    kappa_index,
    max_order,
    sylvester_residuals,
)
from stieltjes_string.moments import moments_from_measure

from conftest import measures, small_rationals


def leibniz_det(matrix):
    """Permutation expansion; independent of the elimination code."""
    n = len(matrix)
    total = F(0)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = F(-1) ** inversions
        for row, col in enumerate(perm):
            term *= matrix[row][col]
        total += term
    return total


def table_of(points, K, **kw):
    return hankel_table(moments_from_measure(DiscreteMeasure(points, **kw), K))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 5).flatmap(lambda n: st.lists(st.lists(small_rationals, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_leibniz(matrix):
    assert det_exact(matrix)[0] == leibniz_det(matrix)


def test_family_bounds():
    assert [max_order(i, 3) for i in (-2, -1, 0, 1, 2)] == [5, 4, 4, 3, 3]
    t = table_of(((1, 1),), 3)
    assert {i: t.top(i) for i in t.delta} == {-2: 5, -1: 4, 0: 4, 1: 3, 2: 3}


def test_empty_determinants_are_one():
    t = table_of(((F(1, 3), 2),), 2, b=1, s_minus1=5)
    assert all(t[i, 0] == 1 for i in (-2, -1, 0, 1, 2))


def test_delta1_table():
    t = table_of(((1, 1),), 2)
    assert (t[0, 1], t[0, 2], t[1, 1], t[-1, 2]) == (1, 0, 1, -1)


def test_pair_table():
    t = table_of(((1, 1), (-1, 1)), 2)
    assert (t[0, 2], t[1, 1], t[1, 2], t[-2, 3]) == (4, 0, -4, -8)


def test_tables_match_leibniz_entrywise():
    ms = moments_from_measure(DiscreteMeasure(((F(1, 2), 3), (-2, F(1, 5)), (0, 1)), b=2, s_minus1=F(-1, 3)), 3)
    t = hankel_table(ms)
    for i in t.delta:
        for k in range(t.top(i) + 1):
            assert t[i, k] == leibniz_det(hankel_matrix(ms, i, k))


def test_sylvester_examples():
    res = {(rid, k): v for rid, k, v in sylvester_residuals(table_of(((0, 1),), 2))}
    assert res[("two_zero", 1)] == 0
    res = {(rid, k): v for rid, k, v in sylvester_residuals(table_of(((1, 1),), 2))}
    assert res[("one_minus_one", 1)] == 0


@settings(max_examples=60, deadline=None)
@given(measures(), st.integers(0, 5))
def test_sylvester_residuals_vanish(mu, K):
    residuals = sylvester_residuals(hankel_table(moments_from_measure(mu, K)))
    assert all(v == 0 for _, _, v in residuals)
    if K >= 1:
        assert {rid for rid, _, _ in residuals} == {"one_minus_one", "two_zero", "zero_minus_two"}


@settings(max_examples=60, deadline=None)
@given(measures(max_points=4))
def test_zero_pattern_laws(mu):
    D = mu.D
    t = hankel_table(moments_from_measure(mu, D + 2))
    for k in range(t.top(0) + 1):
        assert (t[0, k] > 0) if k <= D else (t[0, k] == 0)
    assert (t[1, D] == 0) == mu.has_zero
    ones = [t[1, k] for k in range(D + 1)]
    assert not any(a == 0 and b == 0 for a, b in zip(ones, ones[1:]))


@pytest.mark.parametrize(
    "points, upto, expected",
    [(((1, 1),), 1, (0, 1)), (((0, 1),), 1, (0,)), (((1, 1), (-1, 1)), 2, (0, 2))],
)
def test_kappa_examples(points, upto, expected):
    kap = kappa_index(table_of(points, 2), upto)
    assert kap.kappa == expected
    assert kap(1) == 0


def test_kappa_step_law():
    t = table_of(((1, 1), (-1, 1), (2, 3), (-2, 3), (0, 1)), 6)
    kap = kappa_index(t, 5)
    for a, b in zip(kap.kappa, kap.kappa[1:]):
        assert b - a == (2 if t[1, a + 1] == 0 else 1)


def test_kappa_rejects_consecutive_zeros():
    t = HankelTable({-2: (1,), -1: (1,), 0: (1, 1, 1), 1: (1, 0, 0), 2: (1, 1, 1)})
    with pytest.raises(InconsistentMomentData, match="inconsistent moment data"):
        kappa_index(t, 2)


def hilbert(K):
    return MomentSequence(0, 0, tuple(F(1, k + 1) for k in range(2 * K + 1)))


def test_hilbert_delta_0_3():
    t = hankel_table(hilbert(3))
    assert t[0, 3] == F(1, 2160)
    assert leibniz_det(hankel_matrix(hilbert(3), 0, 3)) == F(1, 2160)


def test_float_table_exact_for_delta0():
    ft = hankel_table_float(moments_from_measure(DiscreteMeasure(((0, 1),)), 2))
    assert ft.max_rel_error == 0.0
    assert ft.delta[0][1] == 1.0


def test_float_table_hilbert_degrades():
    ft = hankel_table_float(hilbert(12))
    assert all(v != 0 for v in ft.exact.delta[0])
    assert ft.rel_error[0][12] > ft.rel_error[0][4]
    assert ft.max_rel_error > 1e-6
    assert math.isclose(ft.delta[0][3], 1 / 2160, rel_tol=1e-12)
