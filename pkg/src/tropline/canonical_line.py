"""The canonical tropical line through n collinear points, and its face label.

Directions and leaves are labelled ``1..d`` as in the usual notation; node
coordinates are tuples indexed from 0, so direction ``i`` is coordinate ``i-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import NotCollinear, RankOne, UnsupportedDimension
from .trop_core import as_matrix, projective_point, trop_det
from .trop_hull import MetricTree, build_hull_tree


def support(slope) -> frozenset:
    return frozenset(i + 1 for i, x in enumerate(slope) if x)


@dataclass
class LineTree:
    tree: MetricTree
    leaf_rays: list  # (node id, direction in 1..d)
    anchor: int

    @property
    def d(self) -> int:
        return self.tree.dim

    def outgoing_supports(self, v: int) -> list:
        sups = [support(s) for _, s, _, _ in self.tree.outgoing(v)]
        sups += [frozenset([i]) for node, i in self.leaf_rays if node == v]
        return sups

    def degree(self, v: int) -> int:
        return len(self.outgoing_supports(v))

    def check_zero_tension(self) -> bool:
        full = frozenset(range(1, self.d + 1))
        for v in range(len(self.tree.nodes)):
            sups = self.outgoing_supports(v)
            if sum(len(s) for s in sups) != self.d or frozenset().union(*sups) != full:
                return False
        return True

    def to_json(self) -> dict:
        from .io import fraction_to_json

        return {
            "nodes": [[fraction_to_json(x) for x in p] for p in self.tree.nodes],
            "edges": [
                {"a": a, "b": b, "slope": list(s), "length": fraction_to_json(length)}
                for a, b, s, length in self.tree.edges
            ],
            "rays": [{"node": v, "direction": i} for v, i in self.leaf_rays],
            "anchor": self.anchor,
            "points": list(self.tree.point_locations),
        }

    def to_dot(self) -> str:
        body = self.tree.to_dot("line").splitlines()[:-1]
        for k, (v, i) in enumerate(self.leaf_rays):
            body.append(f'  r{k} [shape=point]; n{v} -- r{k} [label="e{i}", style=dashed];')
        body.append("}")
        return "\n".join(body)


def _rank_class(M) -> int:
    """1, 2 or 3 meaning rank one, exactly two, at least three."""
    cols = [projective_point(c) for c in M.columns()]
    if len(set(cols)) == 1:
        return 1
    for rows in combinations(range(M.d), 3):
        for cs in combinations(range(M.n), 3):
            if not trop_det(M.minor(rows, cs)).singular:
                return 3
    return 2


def _find_anchor(tree: MetricTree, rays, degree) -> int:
    # walk inwards from the start of the direction-1 ray through points sitting on leaf 1
    v = next(node for node, i in rays if i == 1)
    seen = {v}
    while degree(v) == 2:
        nxt = [w for w, s, _, _ in tree.outgoing(v) if support(s) == frozenset(range(2, tree.dim + 1))]
        if not nxt or nxt[0] in seen:
            break
        v = nxt[0]
        seen.add(v)
    return v


def canonical_line(M) -> LineTree:
    """Build the line generated by the columns of a tropical rank two matrix.

    The hull tree gets a ray in every coordinate direction missing at each of
    its nodes, then everything is translated so that the node where the
    direction-1 leaf attaches sits at the origin.
    """
    M = as_matrix(M)
    rk = _rank_class(M)
    if rk == 1:
        raise RankOne("all columns coincide in TP^{d-1}; there is no unique line")
    if rk == 3:
        raise NotCollinear("tropical rank is at least three")
    tree = build_hull_tree(M.columns())
    d = tree.dim
    full = frozenset(range(1, d + 1))
    rays = []
    for v in range(len(tree.nodes)):
        used = frozenset().union(*[support(s) for _, s, _, _ in tree.outgoing(v)])
        rays += [(v, i) for i in sorted(full - used)]

    line = LineTree(tree, rays, 0)
    if not line.check_zero_tension():
        raise NotCollinear("augmented hull violates zero tension")
    anchor = _find_anchor(tree, rays, line.degree)
    origin = tree.nodes[anchor]
    shifted = [projective_point(x - o for x, o in zip(p, origin)) for p in tree.nodes]
    line.tree = MetricTree(shifted, list(tree.edges), list(tree.point_locations))
    line.anchor = anchor
    return line


# ---------------------------------------------------------------------------
# face descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FaceDescriptor:
    """Combinatorial type of a configuration on its canonical line.

    ``splits`` lists the internal edges of the leaf-labelled tree, each by its
    side not containing leaf 1.  A placement is ``("leaf", i)``,
    ``("edge", split, rank)`` or ``("node", partition)``; ``rank`` orders the
    points on an internal edge starting from the leaf-1 side and is ``None``
    in unrefined descriptors.
    """

    d: int
    splits: tuple
    placements: tuple

    @property
    def n(self) -> int:
        return len(self.placements)

    def unrefined(self) -> "FaceDescriptor":
        pl = tuple(("edge", p[1], None) if p[0] == "edge" else p for p in self.placements)
        return FaceDescriptor(self.d, self.splits, pl)

    def to_string(self) -> str:
        """Length-n string over {0,1,2,3}; only meaningful for d = 3."""
        if self.d != 3:
            raise UnsupportedDimension("string form exists only for d = 3")
        return "".join(str(p[1]) if p[0] == "leaf" else "0" for p in self.placements)

    def to_json(self):
        if self.d == 3:
            return self.to_string()
        return {
            "d": self.d,
            "splits": [list(s) for s in self.splits],
            "placements": [_placement_json(p) for p in self.placements],
        }


def _placement_json(p):
    if p[0] == "leaf":
        return {"leaf": p[1]}
    if p[0] == "edge":
        return {"edge": list(p[1]), "rank": p[2]}
    return {"node": [list(b) for b in p[1]]}


def _split_key(side, d) -> tuple:
    side = frozenset(side)
    if 1 in side:
        side = frozenset(range(1, d + 1)) - side
    return tuple(sorted(side))


def face_label(M) -> FaceDescriptor:
    """Read off where each column sits on the canonical line of ``M``."""
    M = as_matrix(M)
    if M.d < 3:
        raise UnsupportedDimension("face labels need d >= 3")
    line = canonical_line(M)
    tree, d = line.tree, line.d
    splits = set()
    for _, _, s, _ in tree.edges:
        side = support(s)
        if 2 <= len(side) <= d - 2:
            splits.add(_split_key(side, d))

    placements = []
    on_edge = {}
    for j, v in enumerate(tree.point_locations):
        sups = line.outgoing_supports(v)
        if len(sups) >= 3:
            part = tuple(sorted(tuple(sorted(s)) for s in sups))
            placements.append(("node", part))
            continue
        key = _split_key(sups[0], d)
        if len(key) == 1:
            placements.append(("leaf", key[0]))
        elif len(key) == d - 1:
            placements.append(("leaf", 1))
        else:
            placements.append(("edge", key, None))
            on_edge.setdefault(key, []).append((tree.nodes[v][key[0] - 1], j))

    for key, pts in on_edge.items():
        positions = sorted({pos for pos, _ in pts})
        for pos, j in pts:
            placements[j] = ("edge", key, positions.index(pos))
    return FaceDescriptor(d, tuple(sorted(splits)), tuple(placements))
