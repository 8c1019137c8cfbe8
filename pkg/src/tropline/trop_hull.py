"""Tropical segments and the tree-shaped tropical convex hull of a rank-two configuration."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import DimensionMismatch, NotATree
from .trop_core import projective_point

Slope = tuple  # 0/1 ints, neither all-zero nor all-one


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class SegmentPolyline:
    breakpoints: tuple
    slopes: tuple
    lengths: tuple

    @property
    def pieces(self):
        return list(zip(self.breakpoints, self.breakpoints[1:], self.slopes, self.lengths))


def slope_between(a, b):
    """Return ``(slope, length)`` with ``b = a + length * slope`` modulo (1, ..., 1).

    Raises :class:`NotATree` if ``b - a`` is not a multiple of a 0/1 vector.
    """
    diff = [y - x for x, y in zip(a, b)]
    vals = sorted(set(diff))
    if len(vals) == 1:
        raise NotATree("zero-length edge")
    if len(vals) != 2:
        raise NotATree(f"{a} -> {b} is not an ordinary segment of a tropical line")
    lo, hi = vals
    return tuple(int(x == hi) for x in diff), hi - lo


def tropical_segment(p, q) -> SegmentPolyline:
    """The min-plus segment from ``p`` to ``q`` as a polyline with 0/1 slopes."""
    p, q = projective_point(p), projective_point(q)
    if len(p) != len(q):
        raise DimensionMismatch("points must have equal dimension")
    delta = [pi - qi for pi, qi in zip(p, q)]
    levels = sorted(set(delta), reverse=True)
    points = [projective_point(min(pi, lev + qi) for pi, qi in zip(p, q)) for lev in levels]
    slopes, lengths = [], []
    for hi, lo in zip(levels, levels[1:]):
        slopes.append(tuple(int(x < hi) for x in delta))
        lengths.append(hi - lo)
    return SegmentPolyline(tuple(points), tuple(slopes), tuple(lengths))


def complement(s: Slope) -> Slope:
    return tuple(1 - x for x in s)


@dataclass
class MetricTree:
    """Nodes are canonical projective points; edges ``(a, b, slope a->b, length)``."""

    nodes: list
    edges: list
    point_locations: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.nodes[0])

    def outgoing(self, v: int):
        """``(neighbour, slope, length, edge id)`` for every edge at node ``v``."""
        out = []
        for e, (a, b, s, length) in enumerate(self.edges):
            if a == v:
                out.append((b, s, length, e))
            elif b == v:
                out.append((a, complement(s), length, e))
        return out

    def adjacency(self) -> dict:
        adj = {v: [] for v in range(len(self.nodes))}
        for a, b, _, _ in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def path(self, u: int, v: int) -> list:
        adj = self.adjacency()
        prev = {u: None}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in prev:
                    prev[y] = x
                    stack.append(y)
        out = [v]
        while out[-1] != u:
            out.append(prev[out[-1]])
        return out[::-1]

    def path_polyline(self, u: int, v: int) -> SegmentPolyline:
        """The polyline traced along the tree path, with collinear pieces merged."""
        nodes = self.path(u, v)
        pts, slopes, lengths = [self.nodes[nodes[0]]], [], []
        for x, y in zip(nodes, nodes[1:]):
            s, length = slope_between(self.nodes[x], self.nodes[y])
            if slopes and slopes[-1] == s:
                pts[-1] = self.nodes[y]
                lengths[-1] += length
            else:
                pts.append(self.nodes[y])
                slopes.append(s)
                lengths.append(length)
        return SegmentPolyline(tuple(pts), tuple(slopes), tuple(lengths))

    def canonical(self):
        """Order-free description used to compare trees built in different orders."""
        return (
            tuple(self.nodes),
            tuple(sorted((min(a, b), max(a, b)) for a, b, _, _ in self.edges)),
            tuple(self.point_locations),
        )

    def validate(self) -> None:
        n = len(self.nodes)
        if len(self.edges) != n - 1:
            raise NotATree(f"{n} nodes but {len(self.edges)} edges")
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            for y in adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != n:
            raise NotATree("hull is disconnected")
        for v in range(n):
            used = [0] * self.dim
            for _, s, _, _ in self.outgoing(v):
                for i, x in enumerate(s):
                    used[i] += x
            if max(used, default=0) > 1:
                raise NotATree(f"outgoing slopes at node {v} overlap")

    def to_dot(self, name: str = "hull") -> str:
        lines = [f"graph {name} {{"]
        for v, p in enumerate(self.nodes):
            label = "(" + ",".join(_fmt(x) for x in p) + ")"
            lines.append(f'  n{v} [label="{label}"];')
        for a, b, s, length in self.edges:
            slope = "".join(map(str, s))
            lines.append(f'  n{a} -- n{b} [label="{slope} x {_fmt(length)}"];')
        lines.append("}")
        return "\n".join(lines)


def _split_piece(a, b, candidates):
    # nodes strictly inside the straight segment a-b, ordered from a
    ab = [y - x for x, y in zip(a, b)]
    k = next(i for i, x in enumerate(ab) if x != 0)
    inside = []
    for c in candidates:
        t = Fraction(c[k] - a[k]) / ab[k]
        if 0 < t < 1 and all(ci - ai == t * x for ci, ai, x in zip(c, a, ab)):
            inside.append((t, c))
    inside.sort()
    return [a] + [c for _, c in inside] + [b]


def build_hull_tree(columns: Sequence) -> MetricTree:
    """Tropical convex hull of rank-two points, stored as a metric tree.

    Every pairwise segment is inserted; pieces are split at all breakpoints
    lying on them, so overlapping collinear pieces merge into shared edges.
    Node order is lexicographic, which makes the result independent of the
    order in which columns are supplied (up to ``point_locations``).
    """
    pts = [projective_point(c) for c in columns]
    if not pts:
        raise ValueError("need at least one column")
    if len({len(p) for p in pts}) != 1:
        raise DimensionMismatch("columns must have equal dimension")
    segments = [tropical_segment(p, q) for p, q in combinations(pts, 2)]
    nodes = set(pts)
    for seg in segments:
        nodes.update(seg.breakpoints)
    nodes = sorted(nodes)
    index = {p: i for i, p in enumerate(nodes)}
    edge_set = {}
    for seg in segments:
        for a, b, _, _ in seg.pieces:
            chain = _split_piece(a, b, nodes)
            for x, y in zip(chain, chain[1:]):
                i, j = sorted((index[x], index[y]))
                if (i, j) not in edge_set:
                    s, length = slope_between(nodes[i], nodes[j])
                    edge_set[i, j] = (i, j, s, length)
    tree = MetricTree(nodes, [edge_set[k] for k in sorted(edge_set)], [index[p] for p in pts])
    tree.validate()
    return tree
