"""Reduced integer homology of simplicial complexes.

Boundary matrices are reduced over Z by sparse elimination on unit pivots
(each such step is unimodular, so it preserves invariant factors); whatever
is left without a unit entry goes through a dense Smith normal form.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import FaceNotInComplex
from .simplicial import SimplicialComplex


@dataclass
class Chain:
    """Integer combination of oriented k-faces (sorted vertex tuples)."""

    k: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {tuple(f): c for f, c in self.coeffs.items() if c}

    def __add__(self, other: "Chain") -> "Chain":
        out = dict(self.coeffs)
        for f, c in other.coeffs.items():
            out[f] = out.get(f, 0) + c
        return Chain(self.k, out)

    def __neg__(self) -> "Chain":
        return Chain(self.k, {f: -c for f, c in self.coeffs.items()})

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __rmul__(self, a: int) -> "Chain":
        return Chain(self.k, {f: a * c for f, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Chain) and self.k == other.k and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs


def boundary(c: Chain, K: SimplicialComplex | None = None) -> Chain:
    """Simplicial boundary with sign ``(-1)^position`` for each deleted vertex."""
    if K is not None:
        for f in c.coeffs:
            if not K.is_face(f):
                raise FaceNotInComplex(f"{f} is not a face")
    out = {}
    for f, a in c.coeffs.items():
        for pos in range(len(f)):
            g = f[:pos] + f[pos + 1:]
            out[g] = out.get(g, 0) + (-1) ** pos * a
    return Chain(c.k - 1, out)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


def smith_normal_form(A) -> tuple:
    """Invariant factors ``d_1 | d_2 | ...`` (all nonzero, positive) and the rank."""
    a = [list(map(int, row)) for row in A]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        dirty = True
            if dirty:
                # move the smallest leftover in row/column t to the pivot
                best = (abs(p), t, t)
                for i in range(t + 1, m):
                    if a[i][t] and abs(a[i][t]) < best[0]:
                        best = (abs(a[i][t]), i, t)
                for j in range(t + 1, n):
                    if a[t][j] and abs(a[t][j]) < best[0]:
                        best = (abs(a[t][j]), t, j)
                _, i, j = best
                a[t], a[i] = a[i], a[t]
                for row in a:
                    row[t], row[j] = row[j], row[t]
                continue
            # divisibility: p must divide the rest
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
        diag.append(abs(a[t][t]))
        t += 1
    return diag, len(diag)


class SparseIntMatrix:
    """Row dicts plus column index sets; supports in-place unit-pivot elimination."""

    def __init__(self, nrows: int, ncols: int, entries):
        self.nrows, self.ncols = nrows, ncols
        self.rows = [dict() for _ in range(nrows)]
        self.cols = [set() for _ in range(ncols)]
        for i, j, v in entries:
            if v:
                self.rows[i][j] = self.rows[i].get(j, 0) + v
                if self.rows[i][j]:
                    self.cols[j].add(i)
                else:
                    del self.rows[i][j]
                    self.cols[j].discard(i)

    def eliminate_units(self) -> int:
        """Pivot on +-1 entries until none is left; returns the number of pivots."""
        rows, cols = self.rows, self.cols
        heap = [(len(c), j) for j, c in enumerate(cols) if c]
        heapq.heapify(heap)
        alive_c = [bool(c) for c in cols]
        rank = 0
        stale = set()
        while heap:
            size, c = heapq.heappop(heap)
            if not alive_c[c] or size != len(cols[c]):
                if alive_c[c] and cols[c]:
                    heapq.heappush(heap, (len(cols[c]), c))
                continue
            if not cols[c]:
                alive_c[c] = False
                continue
            piv = None
            for r in cols[c]:
                if abs(rows[r][c]) == 1 and (piv is None or len(rows[r]) < len(rows[piv])):
                    piv = r
            if piv is None:
                stale.add(c)
                continue
            prow = rows[piv]
            pv = prow[c]
            touched = set()
            for r in list(cols[c]):
                if r == piv:
                    continue
                row = rows[r]
                factor = row[c] * pv
                for j, v in prow.items():
                    nv = row.get(j, 0) - factor * v
                    if nv:
                        if j not in row:
                            cols[j].add(r)
                        row[j] = nv
                    elif j in row:
                        del row[j]
                        cols[j].discard(r)
                    touched.add(j)
            for j in prow:
                cols[j].discard(piv)
                touched.add(j)
            rows[piv] = {}
            alive_c[c] = False
            cols[c] = set()
            rank += 1
            for j in touched:
                if alive_c[j] and cols[j]:
                    heapq.heappush(heap, (len(cols[j]), j))
                    stale.discard(j)
            if not heap and stale:
                # columns that had no unit entry may have gained one
                for j in stale:
                    if alive_c[j] and cols[j] and any(abs(rows[r][j]) == 1 for r in cols[j]):
                        heapq.heappush(heap, (len(cols[j]), j))
                stale = set()
        return rank

    def remaining_dense(self) -> list:
        live_r = [i for i, r in enumerate(self.rows) if r]
        live_c = sorted({j for i in live_r for j in self.rows[i]})
        pos = {j: k for k, j in enumerate(live_c)}
        out = []
        for i in live_r:
            row = [0] * len(live_c)
            for j, v in self.rows[i].items():
                row[pos[j]] = v
            out.append(row)
        return out


def invariant_factors_sparse(nrows: int, ncols: int, entries) -> tuple:
    """Rank and the invariant factors > 1 of a sparse integer matrix."""
    S = SparseIntMatrix(nrows, ncols, entries)
    rank = S.eliminate_units()
    rest = S.remaining_dense()
    if not rest:
        return rank, []
    diag, r = smith_normal_form(rest)
    return rank + r, [x for x in diag if x > 1]


# ---------------------------------------------------------------------------
# homology
# ---------------------------------------------------------------------------


@dataclass
class HomologyProfile:
    betti: list
    torsion: list

    def group(self, k: int) -> tuple:
        return self.betti[k], self.torsion[k]

    def as_strings(self) -> list:
        out = []
        for b, t in zip(self.betti, self.torsion):
            parts = ([f"Z^{b}" if b > 1 else "Z"] if b else []) + [f"Z/{x}" for x in t]
            out.append(" + ".join(parts) if parts else "0")
        return out

    def to_json(self) -> list:
        return [{"dim": k, "betti": b, "torsion": t} for k, (b, t) in enumerate(zip(self.betti, self.torsion))]


def boundary_entries(faces_k: list, faces_km1: list) -> list:
    """Sparse boundary matrix rows=(k-1)-faces, cols=k-faces; augmentation when k = 0."""
    if not faces_km1 or faces_km1 == [()]:
        return [(0, j, 1) for j in range(len(faces_k))]
    index = {f: i for i, f in enumerate(faces_km1)}
    entries = []
    for j, f in enumerate(faces_k):
        for pos in range(len(f)):
            entries.append((index[f[:pos] + f[pos + 1:]], j, -1 if pos % 2 else 1))
    return entries


def reduced_homology(K: SimplicialComplex) -> HomologyProfile:
    """Reduced integral homology groups in dimensions 0..dim K."""
    if not K.facets:
        raise ValueError("complex is empty")
    top = K.dim
    faces = [[()]] + K.all_faces  # faces[k + 1] = k-faces
    ranks, tors = {}, {}
    for k in range(0, top + 1):
        ranks[k], tors[k] = invariant_factors_sparse(
            len(faces[k]), len(faces[k + 1]), boundary_entries(faces[k + 1], faces[k])
        )
    ranks[top + 1], tors[top + 1] = 0, []
    betti, torsion = [], []
    for k in range(top + 1):
        betti.append(len(faces[k + 1]) - ranks[k] - ranks[k + 1])
        torsion.append(sorted(tors[k + 1]))
    return HomologyProfile(betti, torsion)


def rational_rank(nrows: int, ncols: int, entries) -> int:
    """Rank over Q by sparse Gaussian elimination with exact fractions."""
    rows = {}
    for i, j, v in entries:
        rows.setdefault(i, {})
        rows[i][j] = rows[i].get(j, 0) + Fraction(v)
    pivots = {}
    rank = 0
    for i in sorted(rows):
        row = {j: v for j, v in rows[i].items() if v}
        while row:
            j = min(row)
            if j not in pivots:
                pivots[j] = row
                rank += 1
                break
            prow = pivots[j]
            f = row[j] / prow[j]
            for jj, vv in prow.items():
                nv = row.get(jj, 0) - f * vv
                if nv:
                    row[jj] = nv
                else:
                    row.pop(jj, None)
    return rank


def rational_betti(K: SimplicialComplex) -> list:
    """Reduced Betti numbers over Q, independent of the integer elimination path."""
    faces = [[()]] + K.all_faces
    top = K.dim
    ranks = {top + 1: 0}
    for k in range(0, top + 1):
        ranks[k] = rational_rank(len(faces[k]), len(faces[k + 1]), boundary_entries(faces[k + 1], faces[k]))
    return [len(faces[k + 1]) - ranks[k] - ranks[k + 1] for k in range(top + 1)]
