import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropline.errors import DimensionMismatch, NonSquare
from tropline.trop_core import (
    TropicalMatrix,
    barvinok_rank_le2,
    barvinok_rank_le2_bruteforce,
    hungarian,
    projective_point,
    segment_membership,
    to_fraction,
    trop_det,
    tropical_rank,
    tropical_rank_bruteforce,
)


def test_det_all_zero_is_singular():
    s = trop_det([[0, 0], [0, 0]])
    assert (s.value, s.singular, s.witness_count) == (0, True, 2)


def test_det_swap_matrix_nonsingular():
    s = trop_det([[0, 1], [1, 0]])
    assert s.value == 0 and not s.singular and s.witness_count == 1


def test_det_three_by_three_identity_like():
    assert trop_det([[0, 1, 1], [1, 0, 1], [1, 1, 0]]) == trop_det([[0, 1, 1], [1, 0, 1], [1, 1, 0]], "brute")
    s = trop_det([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert s.value == 0 and not s.singular


def test_det_non_square():
    with pytest.raises(NonSquare):
        trop_det([[0, 1, 2]])


def test_det_unknown_method():
    with pytest.raises(ValueError):
        trop_det([[0]], method="magic")


def test_large_matrix_uses_assignment_and_matches_brute():
    rng = random.Random(5)
    for _ in range(5):
        a = [[rng.randint(-3, 3) for _ in range(9)] for _ in range(9)]
        auto = trop_det(a)
        assert auto.value == trop_det(a, "assignment").value
    a = [[0 if i == j else 5 for j in range(9)] for i in range(9)]
    assert not trop_det(a).singular
    a[0][1] = a[1][0] = 0
    assert trop_det(a).singular


def test_hungarian_duals_are_feasible_and_tight():
    rng = random.Random(2)
    for _ in range(50):
        a = [[Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(5)] for _ in range(5)]
        assign, u, v = hungarian(a)
        for i in range(5):
            for j in range(5):
                assert a[i][j] - u[i] - v[j] >= 0
            assert a[i][assign[i]] - u[i] - v[assign[i]] == 0


def test_rank_examples():
    assert tropical_rank([[0] * 3] * 3) == 1
    x, y = (0, 1, 2), (0, 0, 0)
    assert tropical_rank([[xi + yj for yj in y] for xi in x]) == 1
    assert tropical_rank([[0, 1, 1], [1, 0, 1], [1, 1, 0]]) == 3


def test_rank_witness_is_nonsingular():
    M = TropicalMatrix(((0, 3, 1, 4), (2, 0, 5, 1), (1, 1, 0, 2)))
    r, rows, cols = tropical_rank(M, with_witness=True)
    assert len(rows) == len(cols) == r
    assert not trop_det(M.minor(rows, cols)).singular


def test_segment_membership_examples():
    p, q = (0, -1, -1), (0, 1, 0)
    assert segment_membership(p, p, q)
    assert segment_membership((0, 0, 0), p, q)
    # the formula: lambda = 2, mu = 1 gives (0, 1, 1) != (0, 0, 1)
    assert not segment_membership((0, 0, 1), p, q)
    with pytest.raises(DimensionMismatch):
        segment_membership((0, 0), p, q)


def test_segment_membership_against_grid():
    p, q = (0, -1, -1), (0, 1, 0)
    reachable = set()
    for lam in range(-6, 7):
        for mu in range(-6, 7):
            z = [min(lam + a, mu + b) for a, b in zip(p, q)]
            reachable.add(projective_point(z))
    for z in [(0, a, b) for a in range(-3, 4) for b in range(-3, 4)]:
        assert segment_membership(z, p, q) == (z in reachable)


def test_barvinok_examples():
    assert barvinok_rank_le2([[0, 0], [1, 1], [2, 2]]) == (True, (0, 0))
    assert barvinok_rank_le2(TropicalMatrix.from_columns([(0, 0, 0), (1, 0, 0), (0, 1, 0)])) == (True, (1, 2))
    assert barvinok_rank_le2(TropicalMatrix.from_columns([(1, 0, 0), (0, 1, 0), (0, 0, 1)])) == (False, None)


def test_rejects_floats_and_normalises_integers():
    with pytest.raises(TypeError):
        TropicalMatrix(((0.5, 1),))
    assert to_fraction("4/2") == 2 and type(to_fraction("4/2")) is int
    assert to_fraction("1/3") == Fraction(1, 3)
    assert projective_point((3, "7/2", 1)) == (0, Fraction(1, 2), -2)


small = st.integers(-5, 5)


def matrices(dmin=2, dmax=4, nmin=2, nmax=5):
    return st.integers(dmin, dmax).flatmap(
        lambda d: st.integers(nmin, nmax).flatmap(
            lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=d, max_size=d)
        )
    )


@given(matrices(), st.data())
def test_rank_invariant_under_row_and_column_shifts(rows, data):
    M = TropicalMatrix(tuple(map(tuple, rows)))
    r = tropical_rank(M)
    rs = data.draw(st.lists(small, min_size=M.d, max_size=M.d))
    cs = data.draw(st.lists(small, min_size=M.n, max_size=M.n))
    assert tropical_rank(M.add_to_rows(rs).add_to_columns(cs)) == r
    assert tropical_rank(M.transpose()) == r


@given(st.integers(1, 5).flatmap(lambda r: st.lists(st.lists(small, min_size=r, max_size=r), min_size=r, max_size=r)), st.data())
def test_singularity_invariant_under_shifts(rows, data):
    M = TropicalMatrix(tuple(map(tuple, rows)))
    rs = data.draw(st.lists(small, min_size=M.d, max_size=M.d))
    assert trop_det(M).singular == trop_det(M.add_to_rows(rs)).singular
    assert trop_det(M, "assignment") == trop_det(M, "brute")


@given(matrices(3, 3, 2, 5))
def test_barvinok_implies_rank_at_most_two(rows):
    M = TropicalMatrix(tuple(map(tuple, rows)))
    ok, _ = barvinok_rank_le2(M)
    assert ok == barvinok_rank_le2_bruteforce(M)
    if ok:
        assert tropical_rank(M) <= 2


def test_oracles_on_1000_random_matrices():
    rng = random.Random(11)
    for _ in range(1000):
        d, n = rng.choice((3, 4)), rng.choice((3, 4))
        M = TropicalMatrix(tuple(tuple(rng.randint(-5, 5) for _ in range(n)) for _ in range(d)))
        assert tropical_rank(M) == tropical_rank_bruteforce(M)
        if d == n:
            assert trop_det(M, "assignment") == trop_det(M, "brute")
