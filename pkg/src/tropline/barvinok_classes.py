"""Combinatorics of the Barvinok rank-two subcomplexes.

For d = 3, B_{3,n} is three crosspolytope boundaries with two opposite facets
removed, glued along the missing facets.  For d = 4 every facet of B_{4,n}
belongs to one of twelve classes (bridge pairing, one point-bearing leaf on
each side); faces inside a class are strings over {1,2,3,A,B,C}.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .complex_gen import build_complex
from .errors import InvalidClassString, LengthMismatch
from .simplicial import SimplicialComplex, maximal_faces

ALPHABET = "123ABC"
EMPTY = None  # the empty class: no face of the complex

_TABLE_ROWS = {
    "1": "1CAACC",
    "2": "C2BCBC",
    "3": "AB3ABC",
    "A": "ACAACC",
    "B": "CBBCBC",
    "C": "CCCCCC",
}
TABLE = {(r, c): _TABLE_ROWS[r][k] for r in ALPHABET for k, c in enumerate(ALPHABET)}


def is_valid(s: str) -> bool:
    if not s or any(ch not in ALPHABET for ch in s):
        return False
    used = set(s)
    if "C" in used and used & {"A", "B", "3"}:
        return False
    return not (used <= {"1", "3", "A"} or used <= {"2", "3", "B"})


def _require_valid(s: str) -> None:
    if not is_valid(s):
        raise InvalidClassString(f"{s!r} is not a valid class string")


def class_dimension(s: str) -> int:
    """Cone dimension: number of 1s, 2s and 3s, plus one unless the bridge is fused."""
    _require_valid(s)
    return sum(ch in "123" for ch in s) + (0 if "C" in s else 1)


def normalize(s: str):
    """C-propagation, then :data:`EMPTY` if no face is left."""
    if any(ch not in ALPHABET for ch in s):
        raise InvalidClassString(f"{s!r} uses symbols outside {ALPHABET}")
    if "C" in s:
        s = "".join("C" if ch in "AB3" else ch for ch in s)
    return s if is_valid(s) else EMPTY


def class_intersect(s: str, t: str):
    """Coordinate-wise table lookup followed by :func:`normalize`."""
    if s is EMPTY or t is EMPTY:
        return EMPTY
    if len(s) != len(t):
        raise LengthMismatch(f"lengths {len(s)} and {len(t)} differ")
    return normalize("".join(TABLE[a, b] for a, b in zip(s, t)))


def valid_strings(n: int) -> list:
    return ["".join(p) for p in product(ALPHABET, repeat=n) if is_valid("".join(p))]


# ---------------------------------------------------------------------------
# d = 3: crosspolytopes
# ---------------------------------------------------------------------------


def vertex_point_leaf(ray) -> tuple:
    """For a d=3 vertex (one point on one leaf) return ``(point j, leaf i)``, 0-based j."""
    cols = list(zip(*ray))
    (j,) = [k for k, c in enumerate(cols) if any(c)]
    c = cols[j]
    nonneg = [x - min(c) for x in c]
    return j, 1 + nonneg.index(max(nonneg))


def crosspolytope_part(B: SimplicialComplex, pair) -> SimplicialComplex:
    """C_{i,j}: facets of B_{3,n} whose strings use only the two given symbols."""
    pair = set(pair)
    keep = [k for k, lab in enumerate(B.facet_labels) if set(lab.to_string()) <= {str(a) for a in pair}]
    return SimplicialComplex(B.vertex_count, tuple(B.facets[k] for k in keep), B.vertices,
                             [B.facet_labels[k] for k in keep])


def _all_faces(K: SimplicialComplex) -> set:
    return {f for fs in K.all_faces for f in fs}


def crosspolytope_check(n: int, B: SimplicialComplex | None = None) -> bool:
    """Verify the crosspolytope structure of B_{3,n}.

    Each part C_{i,j} must be the boundary of the n-crosspolytope on the
    antipodal pairs {(p, i), (p, j)} minus the two transversals using a single
    symbol, and two parts sharing a symbol must meet exactly in the boundary
    of that symbol's missing transversal.
    """
    if B is None:
        B = build_complex(3, n, "B")
    label = {v: vertex_point_leaf(r) for v, r in enumerate(B.vertices)}
    parts = {}
    for pair in ((1, 2), (1, 3), (2, 3)):
        C = crosspolytope_part(B, pair)
        verts = {v for f in C.facets for v in f}
        if sorted(label[v] for v in verts) != sorted((p, a) for p in range(n) for a in pair):
            return False
        expected = {
            tuple(sorted(choice)) for choice in product(*[[(p, a) for a in pair] for p in range(n)])
        } - {tuple((p, a) for p in range(n)) for a in pair}
        got = {tuple(sorted(label[v] for v in f)) for f in C.facets}
        if got != expected or len(C.facets) != 2 ** n - 2:
            return False
        parts[pair] = C
    for p, q, a in (((1, 2), (1, 3), 1), ((1, 2), (2, 3), 2), ((1, 3), (2, 3), 3)):
        common = _all_faces(parts[p]) & _all_faces(parts[q])
        tops = {tuple(sorted(label[v] for v in f)) for f in maximal_faces(common)}
        missing = {tuple((k, a) for k in range(n) if k != j) for j in range(n)}
        if tops != missing:
            return False
    return True


def sign_chain(C12: SimplicialComplex) -> dict:
    """``sum sgn(F) F`` over C_{1,2} with ``sgn(F) = (-1)^(number of 1s)``."""
    return {f: (-1) ** lab.to_string().count("1") for f, lab in zip(C12.facets, C12.facet_labels)}


def missing_facet_boundary(B: SimplicialComplex, symbol: int, n: int) -> dict:
    """``[symbol] = sum_j (-1)^j Delta_{X^j}`` for the would-be constant facet."""
    where = {vertex_point_leaf(r): v for v, r in enumerate(B.vertices)}
    out = {}
    for j in range(1, n + 1):
        face = tuple(sorted(where[p, symbol] for p in range(n) if p != j - 1))
        out[face] = (-1) ** j
    return out


# ---------------------------------------------------------------------------
# d = 4: twelve classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BarvinokClass:
    """Bridge split ``S`` (side away from leaf 1), left leaf ``a`` not in S, right leaf ``b`` in S."""

    split: tuple
    left: int
    right: int

    @property
    def key(self) -> tuple:
        return (self.split, self.left, self.right)


def twelve_classes(d: int = 4) -> list:
    from .complex_gen import enumerate_leaf_trees

    out = []
    for tree in enumerate_leaf_trees(d):
        (s,) = tree.splits
        rest = [i for i in range(1, d + 1) if i not in s]
        out += [BarvinokClass(s, a, b) for a in rest for b in s]
    return out


def facet_class(label) -> BarvinokClass:
    (s,) = label.splits
    leaves = {p[1] for p in label.placements if p[0] == "leaf"}
    (a,) = [i for i in leaves if i not in s]
    (b,) = [i for i in leaves if i in s]
    return BarvinokClass(s, a, b)


def _nonneg_columns(ray) -> list:
    out = []
    for c in zip(*ray):
        m = min(c)
        out.append([Fraction(x - m) for x in c])
    return out


def in_class_cone(ray, s: str, cls: BarvinokClass) -> bool:
    """Whether a configuration (ray matrix) lies in the closed cone of string ``s``."""
    S = set(cls.split)
    d = len(ray)
    b2 = [x for x in cls.split if x != cls.right][0]
    lengths, offsets = set(), []
    for x, ch in zip(_nonneg_columns(ray), s):
        outside = [x[i - 1] for i in range(1, d + 1) if i not in S]
        if ch in "AC":
            if any(x):
                return False
            if ch == "C":
                lengths.add(0)
        elif ch == "1":
            if any(x[i - 1] for i in range(1, d + 1) if i != cls.left):
                return False
        else:
            if any(outside):
                return False
            on = [x[i - 1] for i in cls.split]
            if ch == "3":
                if len(set(on)) != 1:
                    return False
                offsets.append(on[0])
            elif ch == "B":
                if len(set(on)) != 1:
                    return False
                lengths.add(on[0])
            elif ch == "2":
                if x[cls.right - 1] < x[b2 - 1]:
                    return False
                lengths.add(x[b2 - 1])
    if len(lengths) > 1:
        return False
    if lengths:
        (L,) = lengths
        return all(u <= L for u in offsets)
    return True


def cone_vertices(B: SimplicialComplex, s, cls: BarvinokClass) -> frozenset:
    if s is EMPTY:
        return frozenset()
    return frozenset(v for v, r in enumerate(B.vertices) if in_class_cone(r, s, cls))


def _linear_rank(rays) -> int:
    rows = [[Fraction(x) for row in r for x in row] for r in rays]
    rank, col = 0, 0
    ncol = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncol:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def geometric_agreement(n: int, d: int = 4, pairs: int = 200, seed: int = 0, B=None) -> bool:
    """Compare the string calculus with actual cones of B_{4,n}.

    For random valid strings in each of the twelve classes, the vertices of
    B_{4,n} inside ``cone(s) & cone(t)`` must be those of
    ``cone(class_intersect(s, t))``, and each cone's rays must span
    ``class_dimension`` dimensions.
    """
    if d != 4:
        raise NotImplementedError("class strings are defined for d = 4")
    if B is None:
        B = build_complex(4, n, "B")
    rng = random.Random(seed)
    strings = valid_strings(n) if n <= 4 else None
    for cls in twelve_classes(4):
        for _ in range(pairs):
            if strings is not None:
                s, t = rng.choice(strings), rng.choice(strings)
            else:
                s, t = _random_valid(n, rng), _random_valid(n, rng)
            u = class_intersect(s, t)
            vs, vt, vu = (cone_vertices(B, x, cls) for x in (s, t, u))
            if vs & vt != vu:
                return False
            for x, vx in ((s, vs), (t, vt)):
                if _linear_rank([B.vertices[v] for v in vx]) != class_dimension(x):
                    return False
    return True


def _random_valid(n: int, rng) -> str:
    while True:
        s = "".join(rng.choice(ALPHABET) for _ in range(n))
        if is_valid(s):
            return s


def class_adjacency(B: SimplicialComplex) -> dict:
    """Classes sharing a codimension-one face, from the facets of B_{4,n}."""
    ridge_classes = {}
    for f, lab in zip(B.facets, B.facet_labels):
        cls = facet_class(lab)
        for k in range(len(f)):
            ridge_classes.setdefault(f[:k] + f[k + 1:], set()).add(cls)
    adj = {c: set() for c in twelve_classes(4)}
    for classes in ridge_classes.values():
        for c in classes:
            adj[c] |= classes - {c}
    return adj
