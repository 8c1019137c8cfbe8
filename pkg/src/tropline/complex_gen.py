"""Enumerate the cells of T_{d,n} and B_{d,n} from leaf-labelled trees and point placements.

A cell is a :class:`~tropline.canonical_line.FaceDescriptor`: a trivalent
tree on leaves ``1..d`` (given by its internal splits) and, for each point, a
leaf or an internal edge.  In the refined decomposition the points sharing an
internal edge are also ordered, which makes every cell a simplicial cone
whose extreme rays are obtained by switching on one parameter at a time.
"""

from __future__ import annotations

import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import permutations, product
from math import gcd

from .canonical_line import FaceDescriptor, face_label
from .errors import NotSquare, UnsupportedDimension
from .simplicial import SimplicialComplex
from .trop_core import TropicalMatrix, barvinok_rank_le2

RayMatrix = tuple  # d rows of ints; every column has first entry 0 and the whole is primitive


@dataclass(frozen=True)
class LeafTree:
    """Trivalent tree on leaves ``1..d``, stored as its internal splits.

    Each split is the leaf set on the side of an internal edge away from
    leaf 1.  Internal nodes are named by the leaves below them when the tree
    hangs from leaf 1: the anchor node is ``{2..d}``, the others are the splits.
    """

    d: int
    splits: tuple

    @property
    def root(self) -> frozenset:
        return frozenset(range(2, self.d + 1))

    def internal_nodes(self) -> list:
        return [self.root] + [frozenset(s) for s in self.splits]

    def children(self, cluster: frozenset) -> list:
        below = [frozenset([i]) for i in cluster] + [
            frozenset(s) for s in self.splits if frozenset(s) < cluster
        ]
        return [c for c in below if not any(c < o for o in below)]

    def segments(self) -> list:
        return [("leaf", i) for i in range(1, self.d + 1)] + [("edge", s) for s in self.splits]


def enumerate_leaf_trees(d: int) -> list:
    """All trivalent trees with ``d`` labelled leaves, as :class:`LeafTree`."""
    if d < 3:
        raise UnsupportedDimension("trivalent leaf-labelled trees need d >= 3")
    trees = [[(1, "c0"), (2, "c0"), (3, "c0")]]
    for k in range(4, d + 1):
        grown = []
        for edges in trees:
            for idx, (x, y) in enumerate(edges):
                w = f"c{k}"
                grown.append(edges[:idx] + edges[idx + 1:] + [(x, w), (w, y), (k, w)])
        trees = grown
    out = {_splits_of(edges, d) for edges in trees}
    return [LeafTree(d, s) for s in sorted(out)]


def _splits_of(edges, d) -> tuple:
    adj = {}
    for x, y in edges:
        adj.setdefault(x, []).append(y)
        adj.setdefault(y, []).append(x)
    splits = []
    for x, y in edges:
        if isinstance(x, int) or isinstance(y, int):
            continue
        seen, stack = {x, y}, [y]
        while stack:
            for z in adj[stack.pop()]:
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        side = {z for z in seen if isinstance(z, int)}
        if 1 in side:
            side = set(range(1, d + 1)) - side
        splits.append(tuple(sorted(side)))
    return tuple(sorted(splits))


def _component(tree: LeafTree, cluster: frozenset, place) -> object:
    kind, where = place[0], place[1]
    inner = frozenset([where]) if kind == "leaf" else frozenset(where)
    if kind == "edge" and inner == cluster:
        return "up"
    for child in tree.children(cluster):
        if inner <= child:
            return child
    return "up"


def regeneration_check(tree: LeafTree, placement) -> bool:
    """Every internal node must separate at least two of the placed points."""
    for cluster in tree.internal_nodes():
        comps = {_component(tree, cluster, p) for p in placement}
        if len(comps) < 2:
            return False
    return True


def iter_facets(d: int, n: int, refined: bool = True):
    """Yield the maximal cells of T_{d,n} as :class:`FaceDescriptor`."""
    if d >= 5:
        warnings.warn(f"d={d}: the number of cells grows like (2d-5)!! * (2d-3)^n", stacklevel=2)
    for tree in enumerate_leaf_trees(d):
        yield from _tree_facets(tree, n, refined)


def _tree_facets(tree: LeafTree, n: int, refined: bool):
    d = tree.d
    segs = tree.segments()
    for choice in product(segs, repeat=n):
        if not regeneration_check(tree, choice):
            continue
        if not refined:
            yield FaceDescriptor(
                d, tree.splits, tuple((k, w) if k == "leaf" else (k, w, None) for k, w in choice)
            )
            continue
        groups = {}
        for j, (k, w) in enumerate(choice):
            if k == "edge":
                groups.setdefault(w, []).append(j)
        base = [(k, w) if k == "leaf" else None for k, w in choice]
        orders = [list(permutations(groups[s])) for s in sorted(groups)]
        for combo in product(*orders):
            pl = list(base)
            for s, order in zip(sorted(groups), combo):
                for rank, j in enumerate(order):
                    pl[j] = ("edge", s, rank)
            yield FaceDescriptor(d, tree.splits, tuple(pl))


def enumerate_facets(d: int, n: int, refined: bool = True) -> list:
    return list(iter_facets(d, n, refined))


def is_simplicial_cell(f: FaceDescriptor) -> bool:
    """An unrefined cell is a simplex iff no internal edge carries two points."""
    counts = {}
    for p in f.placements:
        if p[0] == "edge":
            counts[p[1]] = counts.get(p[1], 0) + 1
    return all(c < 2 for c in counts.values())


# ---------------------------------------------------------------------------
# geometry of a refined cell
# ---------------------------------------------------------------------------


def _unit(d, labels):
    return tuple(1 if i + 1 in labels else 0 for i in range(d))


def configuration(f: FaceDescriptor, leaf_offset: dict, edge_gaps: dict) -> list:
    """Columns of the configuration with the given cell parameters.

    ``leaf_offset[j]`` is the distance of leaf point ``j`` from its node;
    ``edge_gaps[split]`` lists the gaps along that internal edge, starting at
    the leaf-1 side, one more than the number of points on it.
    """
    d = f.d
    lengths = {s: sum(edge_gaps[s]) for s in f.splits}
    cols = []
    for j, p in enumerate(f.placements):
        if p[0] == "leaf":
            i = p[1]
            col = [0] * d
            col[i - 1] += leaf_offset[j]
            above = [s for s in f.splits if i in s]
        else:
            s0, rank = p[1], p[2]
            t = sum(edge_gaps[s0][: rank + 1])
            col = [t * x for x in _unit(d, s0)]
            above = [s for s in f.splits if set(s0) < set(s)]
        for s in above:
            col = [c + lengths[s] * x for c, x in zip(col, _unit(d, s))]
        cols.append(col)
    return cols


def canonical_ray(cols) -> RayMatrix:
    cols = [[Fraction(x) - c[0] for x in c] for c in cols]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for c in cols for x in c), 1)
    ints = [[int(x * den) for x in c] for c in cols]
    g = reduce(gcd, (abs(x) for c in ints for x in c), 0)
    if g == 0:
        raise ValueError("zero matrix is the cone point, not a ray")
    return tuple(tuple(c[i] // g for c in ints) for i in range(len(ints[0])))


def cell_parameters(f: FaceDescriptor) -> list:
    """Parameter names of a refined cell: ``("leaf", j)`` or ``("gap", split, r)``."""
    params = [("leaf", j) for j, p in enumerate(f.placements) if p[0] == "leaf"]
    for s in f.splits:
        k = sum(1 for p in f.placements if p[0] == "edge" and p[1] == s)
        params += [("gap", s, r) for r in range(k + 1)]
    return params


def _config_for(f: FaceDescriptor, weights: dict) -> list:
    leaf = {j: 0 for j, p in enumerate(f.placements) if p[0] == "leaf"}
    gaps = {}
    for s in f.splits:
        k = sum(1 for p in f.placements if p[0] == "edge" and p[1] == s)
        gaps[s] = [0] * (k + 1)
    for param, w in weights.items():
        if param[0] == "leaf":
            leaf[param[1]] = w
        else:
            gaps[param[1]][param[2]] = w
    return configuration(f, leaf, gaps)


def facet_extreme_rays(f: FaceDescriptor) -> list:
    """One canonical ray matrix per cell parameter, in :func:`cell_parameters` order."""
    if any(p[0] == "edge" and p[2] is None for p in f.placements):
        raise ValueError("extreme rays are defined for refined (ordered) cells only")
    return [canonical_ray(_config_for(f, {param: 1})) for param in cell_parameters(f)]


def ray_to_matrix(r: RayMatrix) -> TropicalMatrix:
    return TropicalMatrix(r)


def sample_matrix(rays, weights=None) -> TropicalMatrix:
    """Positive combination of ray matrices (plain sum by default)."""
    weights = weights or [1] * len(rays)
    d, n = len(rays[0]), len(rays[0][0])
    return TropicalMatrix(
        tuple(tuple(sum(w * r[i][j] for w, r in zip(weights, rays)) for j in range(n)) for i in range(d))
    )


def points_on_leaves(f: FaceDescriptor) -> set:
    return {p[1] for p in f.placements if p[0] == "leaf"}


def combinatorial_barvinok(f: FaceDescriptor) -> bool:
    """Barvinok rank two on a facet: the hull is a path, i.e. exactly two leaves carry points."""
    return len(points_on_leaves(f)) == 2


def _vertex_key(r: RayMatrix):
    cols = list(zip(*r))
    supp = tuple(j for j, c in enumerate(cols) if any(c))
    nonneg = tuple(tuple(x - min(c) for x in c) for c in cols)
    return supp, tuple(-x for c in nonneg for x in c)


def _tree_cells(job) -> list:
    tree, n, variant, check_filters = job
    cells = []
    for f in _tree_facets(tree, n, refined=True):
        rays = facet_extreme_rays(f)
        if variant == "B":
            semantic = barvinok_rank_le2(sample_matrix(rays))[0]
            if check_filters and semantic != combinatorial_barvinok(f):
                raise RuntimeError(f"Barvinok filters disagree on {f}")
            if not semantic:
                continue
        cells.append((f, rays))
    return cells


def build_complex(
    d: int, n: int, variant: str = "T", check_filters: bool = True, threads: int | None = 1
) -> SimplicialComplex:
    """The refined simplicial complex T_{d,n} or its Barvinok subcomplex B_{d,n}.

    Vertices are the distinct canonical ray matrices; facet labels hold the
    refined :class:`FaceDescriptor` of every facet.  For ``variant="B"`` the
    kept facets are those whose interior sample passes
    :func:`~tropline.trop_core.barvinok_rank_le2`; with ``check_filters`` the
    purely combinatorial criterion is evaluated too and must agree.

    ``threads`` worker processes split the work by leaf tree (``None`` means
    one per CPU); the result does not depend on it.
    """
    if d < 3:
        raise UnsupportedDimension("complexes are defined for d >= 3")
    if variant not in ("T", "B"):
        raise ValueError("variant must be 'T' or 'B'")
    trees = enumerate_leaf_trees(d)
    jobs = [(t, n, variant, check_filters) for t in trees]
    if threads is None:
        threads = os.cpu_count() or 1
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as pool:
            parts = list(pool.map(_tree_cells, jobs))
    else:
        parts = [_tree_cells(job) for job in jobs]
    cells = [c for part in parts for c in part]
    verts = sorted({r for _, rays in cells for r in rays}, key=_vertex_key)
    index = {r: i for i, r in enumerate(verts)}
    facets = [tuple(sorted(index[r] for r in rays)) for _, rays in cells]
    return SimplicialComplex(len(verts), tuple(facets), verts, [f for f, _ in cells])


def unrefined_cells(K: SimplicialComplex) -> list:
    """Merge refined facets back into polyhedral cells: ``(descriptor, vertex tuple)`` pairs.

    Forgetting the order of points on an edge turns a product of simplices
    into a cube-like cone whose extreme rays are the union of those of its
    simplices.
    """
    cells = {}
    for f, lab in zip(K.facets, K.facet_labels):
        cells.setdefault(lab.unrefined(), set()).update(f)
    return [(lab, tuple(sorted(vs))) for lab, vs in cells.items()]


def facet_rays_in(K: SimplicialComplex, face) -> list:
    return [K.vertices[v] for v in face]


def face_sample(K: SimplicialComplex, face, weights=None) -> TropicalMatrix:
    return sample_matrix(facet_rays_in(K, face), weights)


def transpose_duality_check(d: int, K: SimplicialComplex | None = None, extra_samples: int = 0, seed: int = 0):
    """Whether transposition induces an involution on the facets of T_{d,d}.

    Returns ``(ok, perm)`` with ``perm[i]`` the facet index hit by transposing
    the interior sample of facet ``i`` (``None`` where it lands off a facet).
    ``extra_samples`` random interior points per facet must land in the same
    facet for the map to count as well defined.
    """
    import random

    if K is None:
        K = build_complex(d, d, "T")
    if len(K.vertices[0]) != len(K.vertices[0][0]):
        raise NotSquare("transposition duality needs d = n")
    rng = random.Random(seed)
    where = {lab: i for i, lab in enumerate(K.facet_labels)}
    perm = []
    ok = True
    for face in K.facets:
        rays = facet_rays_in(K, face)
        targets = set()
        for t in range(1 + extra_samples):
            w = None if t == 0 else [rng.randint(1, 9) for _ in rays]
            targets.add(where.get(face_label(sample_matrix(rays, w).transpose())))
        if len(targets) != 1 or None in targets:
            ok = False
        perm.append(targets.pop() if len(targets) == 1 else None)
    if ok:
        ok = all(perm[perm[i]] == i for i in range(len(perm)))
    return ok, perm
