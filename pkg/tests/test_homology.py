import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropline.errors import FaceNotInComplex
from tropline.homology import (
    Chain,
    boundary,
    invariant_factors_sparse,
    rational_betti,
    reduced_homology,
    smith_normal_form,
)
from tropline.simplicial import SimplicialComplex


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]]) == ([1, 6], 2)
    assert smith_normal_form([[0, 0], [0, 0]]) == ([], 0)
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == ([2, 6, 12], 3)


def test_snf_divisibility_on_random_matrices():
    rng = random.Random(0)
    for _ in range(200):
        A = [[rng.randint(-6, 6) for _ in range(rng.randint(1, 5))]]
        A += [[rng.randint(-6, 6) for _ in A[0]] for _ in range(rng.randint(0, 4))]
        diag, r = smith_normal_form(A)
        assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
        entries = [(i, j, v) for i, row in enumerate(A) for j, v in enumerate(row)]
        r2, tors = invariant_factors_sparse(len(A), len(A[0]), entries)
        assert r2 == r and tors == [x for x in diag if x > 1]


def hollow(n):
    return SimplicialComplex.from_facets([(i, (i + 1) % n) for i in range(n)])


def test_circle():
    assert reduced_homology(hollow(3)).as_strings() == ["0", "Z"]


def test_projective_plane_torsion():
    # six-vertex real projective plane
    rp2 = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5), (1, 2, 4), (2, 3, 5), (1, 3, 4), (1, 3, 5), (2, 4, 5)]
    h = reduced_homology(SimplicialComplex.from_facets(rp2))
    assert h.as_strings() == ["0", "Z/2", "0"]


def test_known_d3_groups(cx):
    assert reduced_homology(cx(3, 3)).as_strings() == ["0", "0", "Z^5"]
    assert reduced_homology(cx(3, 3, "B")).as_strings() == ["0", "Z^2", "Z"]


def test_b44(cx):
    assert reduced_homology(cx(4, 4, "B")).as_strings() == ["0", "Z/2", "Z/2", "0", "Z"]


def test_rational_cross_check(cx):
    for args in ((3, 4), (3, 5, "B"), (4, 3), (4, 4, "B")):
        K = cx(*args)
        assert reduced_homology(K).betti == rational_betti(K)


def test_json_shape(cx):
    j = reduced_homology(cx(3, 4, "B")).to_json()
    assert j[2] == {"dim": 2, "betti": 0, "torsion": [2]}


def test_boundary_membership_check():
    K = hollow(4)
    with pytest.raises(FaceNotInComplex):
        boundary(Chain(1, {(0, 2): 1}), K)


def test_chain_arithmetic():
    a = Chain(1, {(0, 1): 2, (1, 2): 1})
    b = Chain(1, {(0, 1): -2})
    assert (a + b) == Chain(1, {(1, 2): 1})
    assert (a - a).is_zero()
    assert 3 * b == Chain(1, {(0, 1): -6})


@given(st.sets(st.integers(0, 9), min_size=1, max_size=7), st.integers(-3, 3))
def test_boundary_squared_is_zero(vs, c):
    f = tuple(sorted(vs))
    assert boundary(boundary(Chain(len(f) - 1, {f: c}))).is_zero()
