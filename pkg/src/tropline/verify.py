"""Reproduction suite: recomputes every published count and homology group.

Each group of checks carries the scopes it belongs to (``d3``, ``d4``,
``barvinok``); ``all`` runs every group.  Groups are numbered by the
acceptance criterion they cover.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from math import comb
from typing import Callable

from .barvinok_classes import (
    class_adjacency,
    crosspolytope_check,
    crosspolytope_part,
    geometric_agreement,
    missing_facet_boundary,
    sign_chain,
)
from .canonical_line import face_label
from .complex_gen import (
    build_complex,
    configuration,
    enumerate_facets,
    face_sample,
    is_simplicial_cell,
    transpose_duality_check,
)
from .homology import Chain, boundary, reduced_homology
from .io import Check
from .shelling import (
    all_removal_subsets,
    is_shelling,
    is_shelling_by_union,
    shelling_top_betti,
    ternary_string_complex,
)
from .simplicial import f_vector, purity_check
from .trop_core import (
    TropicalMatrix,
    barvinok_rank_le2,
    barvinok_rank_le2_bruteforce,
    trop_det,
    tropical_rank,
    tropical_rank_bruteforce,
)
from .trop_hull import build_hull_tree

SCOPES = ("d3", "d4", "barvinok", "all")
OUT_OF_SCOPE = "not checked \u2014 out of scope"  # exact wording expected by downstream tooling

_cache: dict = {}
THREADS = 1


def complex_of(d: int, n: int, variant: str = "T"):
    """Build once per process; later groups reuse the complex."""
    key = (d, n, variant)
    if key not in _cache:
        _cache[key] = build_complex(d, n, variant, threads=THREADS)
    return _cache[key]


def _groups_str(h) -> list:
    return h.as_strings()


def _expect_top(dim: int, rank: int) -> list:
    return ["0"] * dim + [f"Z^{rank}" if rank > 1 else "Z"]


# ---------------------------------------------------------------------------
# d = 3
# ---------------------------------------------------------------------------


def counts_d3() -> list:
    out = []
    for n in range(3, 8):
        K = complex_of(3, n)
        fv = f_vector(K)
        out.append(Check(f"T_3,{n} facets", 3 ** n - 3, len(K.facets), len(K.facets) == 3 ** n - 3))
        out.append(Check(f"T_3,{n} vertices", 3 * n, K.vertex_count, K.vertex_count == 3 * n))
        want = [3 ** (k + 1) * comb(n, k + 1) for k in range(n - 1)]
        out.append(Check(f"T_3,{n} f_k for k<n-1", want, fv[: n - 1], fv[: n - 1] == want))
    return out


def homology_d3() -> list:
    out = []
    for n in range(3, 8):
        got = _groups_str(reduced_homology(complex_of(3, n)))
        want = _expect_top(n - 1, 2 ** n - 3)
        out.append(Check(f"H~(T_3,{n})", want, got, got == want))
    return out


def shelling_d3() -> list:
    out = []
    for n in range(2, 8):
        K, order = ternary_string_complex(n)
        ok, bad = is_shelling(K, order)
        out.append(Check(f"snake order shells T_3,{n}", True, ok if ok else f"violation {bad}", ok))
        if ok:
            b = shelling_top_betti(K, order)
            out.append(Check(f"shelling top Betti n={n}", 2 ** n - 3, b, b == 2 ** n - 3))
    for n in range(2, 6):
        results = []
        for removed in all_removal_subsets(n):
            K, order = ternary_string_complex(n, removed)
            ok = is_shelling(K, order)[0]
            if n <= 4:
                ok = ok and is_shelling_by_union(K, order)
            results.append(ok)
        out.append(Check(f"all 8 removal subsets shell, n={n}", 8, sum(results), all(results)))
    return out


B3_EXPECTED = {
    3: ["0", "Z^2", "Z"],
    4: ["0", "Z", "Z/2", "0"],
    5: ["0", "Z", "0", "Z", "Z"],
    6: ["0", "Z", "0", "0", "Z/2", "0"],
    7: ["0", "Z", "0", "0", "0", "Z", "Z"],
}


def barvinok_d3() -> list:
    out = []
    for n, want in B3_EXPECTED.items():
        got = _groups_str(reduced_homology(complex_of(3, n, "B")))
        out.append(Check(f"H~(B_3,{n})", want, got, got == want))
    for n in range(2, 8):
        ok = crosspolytope_check(n, complex_of(3, n, "B"))
        out.append(Check(f"crosspolytope structure n={n}", True, ok, ok))
    return out


# ---------------------------------------------------------------------------
# d = 4
# ---------------------------------------------------------------------------


def counts_d4() -> list:
    coarse = enumerate_facets(4, 4, refined=False)
    nonsimp = sum(not is_simplicial_cell(f) for f in coarse)
    K = complex_of(4, 4)
    return [
        Check("T_4,4 unrefined facets", 1392, len(coarse), len(coarse) == 1392),
        Check("T_4,4 non-simplicial facets", 144, nonsimp, nonsimp == 144),
        Check("T_4,4 refined facets", 1536, len(K.facets), len(K.facets) == 1536),
        Check("T_4,4 vertices", 58, K.vertex_count, K.vertex_count == 58),
    ]


def _homology_check(name, d, n, variant, want) -> Check:
    got = _groups_str(reduced_homology(complex_of(d, n, variant)))
    return Check(name, want, got, got == want)


def homology_t_d4() -> list:
    return [
        _homology_check("H~(T_4,4)", 4, 4, "T", _expect_top(4, 73)),
        _homology_check("H~(T_4,5)", 4, 5, "T", _expect_top(5, 301)),
    ]


B4_EXPECTED = {
    4: ["0", "Z/2", "Z/2", "0", "Z"],
    5: ["0", "Z/2", "0", "Z", "Z/2", "0"],
    6: ["0", "Z/2", "0", "0", "Z/2", "0", "Z"],
}


def homology_b_d4() -> list:
    return [_homology_check(f"H~(B_4,{n})", 4, n, "B", want) for n, want in B4_EXPECTED.items()]


def _purity(d: int) -> list:
    out = []
    for n in range(2, 7):
        for variant in "TB":
            ok = purity_check(complex_of(d, n, variant), d + n - 4)
            out.append(Check(f"{variant}_{d},{n} pure of dim {d + n - 4}", True, ok, ok))
    return out


def purity_d3() -> list:
    return _purity(3)


def purity_d4() -> list:
    return _purity(4)


def classes_d4() -> list:
    B = complex_of(4, 4, "B")
    ok = geometric_agreement(4, pairs=40, B=B)
    adj = class_adjacency(B)
    degrees = sorted({len(v) for v in adj.values()})
    return [
        Check("class strings agree with B_4,4 cones", True, ok, ok),
        Check("each class meets 3 others in a ridge", [3], degrees, degrees == [3]),
    ]


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------


def boundary_squared() -> list:
    out = []
    for d, n, v in ((3, 4, "T"), (3, 5, "B"), (4, 4, "B")):
        K = complex_of(d, n, v)
        bad = 0
        for f in K.facets:
            if not boundary(boundary(Chain(len(f) - 1, {f: 1}))).is_zero():
                bad += 1
        out.append(Check(f"dd = 0 on facets of {v}_{d},{n}", 0, bad, bad == 0))
    return out


def sign_chain_identity() -> list:
    out = []
    for n in range(3, 7):
        B = complex_of(3, n, "B")
        lhs = boundary(Chain(n - 1, sign_chain(crosspolytope_part(B, (1, 2)))))
        one = Chain(n - 2, missing_facet_boundary(B, 1, n))
        two = Chain(n - 2, missing_facet_boundary(B, 2, n))
        eps = (-1) ** n
        rhs = eps * (one + eps * two)
        ok = lhs == rhs
        out.append(Check(f"boundary of signed C_12 chain, n={n}", "(-1)^n([1] + (-1)^n [2])", ok, ok))
    return out


def _round_trip(pairs) -> list:
    out = []
    for d, n in pairs:
        K = complex_of(d, n)
        bad = sum(face_label(face_sample(K, f)) != lab for f, lab in zip(K.facets, K.facet_labels))
        out.append(Check(f"face_label(sample(F)) = F on T_{d},{n}", 0, bad, bad == 0))
    return out


def round_trip_d3() -> list:
    return _round_trip([(3, n) for n in range(2, 6)])


def round_trip_d4() -> list:
    return _round_trip([(4, n) for n in range(2, 6)])


def transpose_duality() -> list:
    out = []
    for d in (3, 4):
        ok, perm = transpose_duality_check(d, complex_of(d, d), extra_samples=2)
        off = sum(p is None for p in perm)
        out.append(Check(f"transpose is an involution on T_{d},{d} facets", True,
                         f"{off} of {len(perm)} facets not sent to a single facet", ok))
    return out


def _random_matrix(rng, d, n, lo=-5, hi=5):
    return TropicalMatrix(tuple(tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(d)))


def rank_oracles(count: int = 1000, seed: int = 0) -> list:
    rng = random.Random(seed)
    det_bad = rank_bad = bar_bad = 0
    for _ in range(count):
        r = rng.choice((3, 4))
        M = _random_matrix(rng, r, r)
        if trop_det(M, "assignment") != trop_det(M, "brute"):
            det_bad += 1
        A = _random_matrix(rng, rng.choice((3, 4)), rng.choice((3, 4, 5)))
        if tropical_rank(A) != tropical_rank_bruteforce(A):
            rank_bad += 1
        B = _random_matrix(rng, 3, rng.randint(2, 5), -3, 3)
        if barvinok_rank_le2(B)[0] != barvinok_rank_le2_bruteforce(B):
            bar_bad += 1
    return [
        Check(f"assignment vs permutation determinant ({count})", 0, det_bad, det_bad == 0),
        Check(f"tropical rank vs brute-force minors ({count})", 0, rank_bad, rank_bad == 0),
        Check(f"Barvinok <= 2 vs envelope oracle ({count})", 0, bar_bad, bar_bad == 0),
    ]


def random_rank_two(rng, d: int, n: int) -> TropicalMatrix:
    """A random rank-two configuration: a random cell with random positive parameters, then shifted."""
    facets = _facet_pool(d, n)
    f = rng.choice(facets)
    leaf = {j: rng.randint(1, 6) for j, p in enumerate(f.placements) if p[0] == "leaf"}
    gaps = {}
    for s in f.splits:
        k = sum(1 for p in f.placements if p[0] == "edge" and p[1] == s)
        gaps[s] = [rng.randint(0 if 0 < r < k else 1, 6) for r in range(k + 1)]
    cols = configuration(f, leaf, gaps)
    shift = [rng.randint(-9, 9) for _ in range(d)]
    return TropicalMatrix.from_columns([[x + s for x, s in zip(c, shift)] for c in cols])


_pool: dict = {}


def _facet_pool(d, n):
    if (d, n) not in _pool:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            _pool[d, n] = enumerate_facets(d, n)
    return _pool[d, n]


def hull_order_independence(count: int = 200, seed: int = 1) -> list:
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        d, n = rng.choice(((3, 4), (4, 4), (4, 5), (5, 4)))
        M = random_rank_two(rng, d, n)
        cols = M.columns()
        perm = list(range(n))
        rng.shuffle(perm)
        t1 = build_hull_tree(cols)
        t2 = build_hull_tree([cols[k] for k in perm])
        same = t1.nodes == t2.nodes and sorted(t1.edges) == sorted(t2.edges)
        same = same and [t1.point_locations[k] for k in perm] == t2.point_locations
        bad += not same
    return [Check(f"hull independent of insertion order ({count})", 0, bad, bad == 0)]


def out_of_scope() -> list:
    return [
        Check("Groebner-complex comparison count 48510", 48510, OUT_OF_SCOPE, None),
        Check("Groebner-complex comparison count 378", 378, OUT_OF_SCOPE, None),
        Check("Groebner-complex comparison count 27720", 27720, OUT_OF_SCOPE, None),
    ]


@dataclass(frozen=True)
class Group:
    name: str
    criterion: int | None
    scopes: frozenset
    run: Callable
    slow: bool = False


GROUPS = [
    Group("counts-d3", 1, frozenset({"d3"}), counts_d3),
    Group("homology-d3", 2, frozenset({"d3"}), homology_d3),
    Group("shelling-d3", 3, frozenset({"d3"}), shelling_d3),
    Group("barvinok-d3", 4, frozenset({"d3", "barvinok"}), barvinok_d3),
    Group("counts-d4", 5, frozenset({"d4"}), counts_d4),
    Group("homology-T-d4", 6, frozenset({"d4"}), homology_t_d4, slow=True),
    Group("homology-B-d4", 6, frozenset({"d4", "barvinok"}), homology_b_d4, slow=True),
    Group("purity-d3", 7, frozenset({"d3"}), purity_d3),
    Group("purity-d4", 7, frozenset({"d4"}), purity_d4, slow=True),
    Group("boundary-squared", 8, frozenset({"d3", "d4"}), boundary_squared),
    Group("sign-chain", 8, frozenset({"d3", "barvinok"}), sign_chain_identity),
    Group("round-trip-d3", 8, frozenset({"d3"}), round_trip_d3),
    Group("round-trip-d4", 8, frozenset({"d4"}), round_trip_d4),
    Group("transpose-duality", 8, frozenset({"d3", "d4"}), transpose_duality),
    Group("rank-oracles", 8, frozenset({"barvinok"}), rank_oracles),
    Group("hull-order", 8, frozenset({"d3", "d4"}), hull_order_independence),
    Group("classes-d4", None, frozenset({"d4", "barvinok"}), classes_d4),
    Group("out-of-scope", 9, frozenset(), out_of_scope),
]


def groups_for(scope: str, skip_slow: bool = False) -> list:
    if scope not in SCOPES:
        raise ValueError(f"scope must be one of {SCOPES}")
    chosen = [g for g in GROUPS if scope == "all" or scope in g.scopes]
    return [g for g in chosen if not (skip_slow and g.slow)]


def run(scope: str, skip_slow: bool = False, emit: Callable | None = None) -> list:
    """Run the chosen groups; ``emit`` receives each :class:`Check` as soon as it is known."""
    checks = []
    for g in groups_for(scope, skip_slow):
        for c in g.run():
            checks.append(c)
            if emit:
                emit(c)
    return checks
