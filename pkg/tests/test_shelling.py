import pytest

from tropline.errors import NotAShelling, NotPure, OrderMismatch
from tropline.shelling import (
    all_removal_subsets,
    is_shelling,
    is_shelling_by_union,
    shelling_top_betti,
    snake_order,
    string_facet,
    ternary_string_complex,
)
from tropline.simplicial import SimplicialComplex


def s(*words):
    return [tuple(int(c) for c in w) for w in words]


def test_snake_small():
    assert snake_order(1) == s("1", "2", "3")
    assert snake_order(2) == s("11", "12", "13", "23", "22", "21", "31", "32", "33")
    with pytest.raises(ValueError):
        snake_order(0)


def test_snake_consecutive_strings_differ_in_one_place():
    for n in range(1, 6):
        order = snake_order(n)
        assert len(set(order)) == 3 ** n
        assert all(sum(a != b for a, b in zip(x, y)) == 1 for x, y in zip(order, order[1:]))


def test_hexagon():
    K, order = ternary_string_complex(2)
    assert [o for o in order] == [string_facet(x) for x in s("12", "13", "23", "21", "31", "32")]
    assert is_shelling(K, order) == (True, None)


def test_string_complex_matches_generated_complex(cx):
    # same facets after matching vertex (point j, leaf i) to index 3j + i - 1
    from tropline.barvinok_classes import vertex_point_leaf

    for n in (3, 4):
        T = cx(3, n)
        relabel = {v: 3 * j + (i - 1) for v, r in enumerate(T.vertices) for j, i in [vertex_point_leaf(r)]}
        got = sorted(tuple(sorted(relabel[v] for v in f)) for f in T.facets)
        K, _ = ternary_string_complex(n)
        assert got == sorted(K.facets)


def test_snake_shells_t3n():
    for n in range(2, 8):
        K, order = ternary_string_complex(n)
        assert is_shelling(K, order)[0]
        assert shelling_top_betti(K, order) == 2 ** n - 3


def test_all_removal_subsets_shell():
    for n in range(2, 6):
        for removed in all_removal_subsets(n):
            K, order = ternary_string_complex(n, removed)
            assert is_shelling(K, order)[0]
            if n <= 4:
                assert is_shelling_by_union(K, order)


def test_disjoint_edges_do_not_shell():
    K = SimplicialComplex.from_facets([(0, 1), (2, 3)])
    ok, bad = is_shelling(K, [(0, 1), (2, 3)])
    assert not ok and bad == (0, 1)
    assert not is_shelling_by_union(K, [(0, 1), (2, 3)])
    with pytest.raises(NotAShelling):
        shelling_top_betti(K, [(0, 1), (2, 3)])


def test_single_simplex():
    K = SimplicialComplex.from_facets([(0, 1, 2)])
    assert shelling_top_betti(K, [(0, 1, 2)]) == 0


def test_order_errors():
    K = SimplicialComplex.from_facets([(0, 1, 2), (2, 3)])
    with pytest.raises(NotPure):
        is_shelling(K, [(0, 1, 2), (2, 3)])
    with pytest.raises(OrderMismatch):
        is_shelling(K, [(0, 1, 2)])


def test_checkers_agree_on_shuffled_orders():
    import random

    rng = random.Random(0)
    K, order = ternary_string_complex(3)
    for _ in range(200):
        o = list(order)
        rng.shuffle(o)
        assert is_shelling(K, o)[0] == is_shelling_by_union(K, o)
