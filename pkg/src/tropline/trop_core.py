"""Exact min-plus arithmetic: tropical determinants, tropical rank, Barvinok rank <= 2.

Tropical addition is ``min`` and tropical multiplication is ``+`` throughout.
Entries are exact rationals: ``int`` when integral, :class:`fractions.Fraction`
otherwise.  Nothing here touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NonSquare

ProjectivePoint = tuple  # tuple[Fraction, ...] with coords[0] == 0

BRUTE_FORCE_MAX = 8


def to_fraction(x):
    """Exact rational from an int, Fraction or ``"p/q"`` string; integral values come back as int."""
    if type(x) is int:
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass ints, Fractions or 'p/q' strings")
    f = x if isinstance(x, Fraction) else Fraction(x)
    return f.numerator if f.denominator == 1 else f


@dataclass(frozen=True)
class TropicalMatrix:
    """A d x n matrix of exact rationals. Columns are points of TP^{d-1}."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(to_fraction(x) for x in row) for row in self.entries)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "TropicalMatrix":
        return cls(tuple(zip(*columns)))

    @property
    def d(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.d, self.n

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.n)]

    def transpose(self) -> "TropicalMatrix":
        return TropicalMatrix(tuple(zip(*self.entries)))

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> "TropicalMatrix":
        return TropicalMatrix(tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def scale(self, k) -> "TropicalMatrix":
        k = to_fraction(k)
        return TropicalMatrix(tuple(tuple(k * x for x in row) for row in self.entries))

    def add_to_rows(self, shifts: Sequence) -> "TropicalMatrix":
        return TropicalMatrix(
            tuple(tuple(x + to_fraction(s) for x in row) for row, s in zip(self.entries, shifts))
        )

    def add_to_columns(self, shifts: Sequence) -> "TropicalMatrix":
        return TropicalMatrix(
            tuple(tuple(x + to_fraction(s) for x, s in zip(row, shifts)) for row in self.entries)
        )

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]


def as_matrix(M) -> TropicalMatrix:
    return M if isinstance(M, TropicalMatrix) else TropicalMatrix(tuple(tuple(r) for r in M))


def projective_point(v: Iterable) -> tuple:
    """Canonical representative of ``v`` modulo (1, ..., 1): first coordinate pinned to 0."""
    v = tuple(to_fraction(x) for x in v)
    return tuple(x - v[0] for x in v)


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DetStatus:
    value: Fraction
    singular: bool
    witness_count: int  # minimizing permutations found, capped at 2


def _det_brute_force(a: Sequence[Sequence[Fraction]]) -> DetStatus:
    r = len(a)
    best = None
    count = 0
    for sigma in permutations(range(r)):
        s = sum(a[i][sigma[i]] for i in range(r))
        if best is None or s < best:
            best, count = s, 1
        elif s == best:
            count += 1
    count = min(count, 2)
    return DetStatus(best, count >= 2, count)


def hungarian(cost: Sequence[Sequence[Fraction]]):
    """Exact min-cost perfect assignment.

    Returns ``(assignment, u, v)`` where ``assignment[i]`` is the column of row
    ``i`` and ``u``, ``v`` are optimal dual potentials, so that
    ``cost[i][j] - u[i] - v[j] >= 0`` with equality on the assignment.
    """
    n = len(cost)
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    p = [0] * (n + 1)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv: list = [None] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = None
            j1 = 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                if minv[j] is None or cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if delta is None or minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while True:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
            if j0 == 0:
                break
    assignment = [0] * n
    for j in range(1, n + 1):
        assignment[p[j] - 1] = j - 1
    return assignment, u[1:], v[1:]


def _has_alternating_cycle(a, assignment, u, v) -> bool:
    # Tight graph: row i -> col j for tight non-matching edges, col j -> its matched row.
    # A directed cycle is exactly a second optimal assignment.
    n = len(a)
    owner = [0] * n
    for i, j in enumerate(assignment):
        owner[j] = i
    succ = [
        [owner[j] for j in range(n) if j != assignment[i] and a[i][j] - u[i] - v[j] == 0]
        for i in range(n)
    ]
    state = [0] * n  # 0 new, 1 on stack, 2 done
    for start in range(n):
        if state[start]:
            continue
        stack = [(start, iter(succ[start]))]
        state[start] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                state[node] = 2
                stack.pop()
            elif state[nxt] == 1:
                return True
            elif state[nxt] == 0:
                state[nxt] = 1
                stack.append((nxt, iter(succ[nxt])))
    return False


def _det_assignment(a: Sequence[Sequence[Fraction]]) -> DetStatus:
    assignment, u, v = hungarian(a)
    value = sum(a[i][assignment[i]] for i in range(len(a)))
    singular = _has_alternating_cycle(a, assignment, u, v)
    return DetStatus(value, singular, 2 if singular else 1)


def trop_det(M, method: str = "auto") -> DetStatus:
    """Tropical determinant of a square matrix and its singularity.

    ``method`` is ``"auto"`` (permutations up to 8x8, assignment beyond),
    ``"brute"`` or ``"assignment"``.
    """
    M = as_matrix(M)
    if M.d != M.n:
        raise NonSquare(f"tropical determinant needs a square matrix, got {M.d}x{M.n}")
    if method == "auto":
        method = "brute" if M.d <= BRUTE_FORCE_MAX else "assignment"
    if method == "brute":
        return _det_brute_force(M.entries)
    if method == "assignment":
        return _det_assignment(M.entries)
    raise ValueError(f"unknown method {method!r}")


def tropical_rank(M, with_witness: bool = False):
    """Size of the largest tropically nonsingular square minor.

    With ``with_witness`` returns ``(rank, rows, cols)`` naming one such minor.
    """
    M = as_matrix(M)
    for r in range(min(M.d, M.n), 0, -1):
        for rows in combinations(range(M.d), r):
            for cols in combinations(range(M.n), r):
                if not trop_det(M.minor(rows, cols)).singular:
                    return (r, rows, cols) if with_witness else r
    raise AssertionError("1x1 minors are never singular")


# ---------------------------------------------------------------------------
# segments and Barvinok rank two
# ---------------------------------------------------------------------------


def segment_membership(z, p, q) -> bool:
    """Whether ``z`` lies on the min-plus segment between ``p`` and ``q``."""
    z, p, q = (tuple(map(to_fraction, v)) for v in (z, p, q))
    if not len(z) == len(p) == len(q):
        raise DimensionMismatch("points must have equal dimension")
    return _on_segment(z, p, q)


def _on_segment(z, p, q) -> bool:
    lam = max([zi - pi for zi, pi in zip(z, p)])
    mu = max([zi - qi for zi, qi in zip(z, q)])
    return all(min(lam + pi, mu + qi) == zi for zi, pi, qi in zip(z, p, q))


def barvinok_rank_le2(M):
    """Decide whether every column lies on the tropical segment of two columns.

    Returns ``(True, (i, j))`` with the lexicographically first witness pair,
    or ``(False, None)``.
    """
    cols = as_matrix(M).columns()
    n = len(cols)
    for i in range(n):
        for j in range(i, n):
            p, q = cols[i], cols[j]
            if all(_on_segment(z, p, q) for z in cols):
                return True, (i, j)
    return False, None


def _spanning_trees(k: int):
    """All spanning trees of the complete graph on range(k), as edge lists (Pruefer decoding)."""
    if k == 1:
        yield []
        return
    if k == 2:
        yield [(0, 1)]
        return
    for seq in product(range(k), repeat=k - 2):
        degree = [1] * k
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(i for i in range(k) if degree[i] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, w = [i for i in range(k) if degree[i] == 1]
        edges.append((u, w))
        yield edges


def envelope_candidates(M) -> set:
    """Candidate apexes of rank-one summands, built from column differences.

    A rank-one summand ``p_i + lam_j`` touching ``M`` in a connected pattern
    has ``p_a - p_b = M[a][j] - M[b][j]`` along a spanning tree of rows.
    """
    M = as_matrix(M)
    d, n = M.shape
    out = set()
    for tree in _spanning_trees(d):
        for labels in product(range(n), repeat=len(tree)):
            adj = {i: [] for i in range(d)}
            for (a, b), j in zip(tree, labels):
                adj[a].append((b, M[a, j] - M[b, j]))
                adj[b].append((a, M[b, j] - M[a, j]))
            p = {0: 0}
            stack = [0]
            while stack:
                a = stack.pop()
                for b, diff in adj[a]:
                    if b not in p:
                        p[b] = p[a] - diff
                        stack.append(b)
            out.add(tuple(p[i] for i in range(d)))
    return out


def barvinok_rank_le2_bruteforce(M) -> bool:
    """Independent oracle: search pairs of rank-one envelopes whose min reproduces ``M``."""
    M = as_matrix(M)
    d, n = M.shape
    envs = []
    for p in envelope_candidates(M):
        lam = [max(M[i, j] - p[i] for i in range(d)) for j in range(n)]
        attained = frozenset(
            (i, j) for i in range(d) for j in range(n) if p[i] + lam[j] == M[i, j]
        )
        envs.append(attained)
    full = {(i, j) for i in range(d) for j in range(n)}
    envs = list(set(envs))
    for a in range(len(envs)):
        for b in range(a, len(envs)):
            if envs[a] | envs[b] == full:
                return True
    return False


def tropical_rank_bruteforce(M) -> int:
    """Oracle rank: every minor checked with permutation enumeration."""
    M = as_matrix(M)
    best = 1
    for r in range(2, min(M.d, M.n) + 1):
        for rows in combinations(range(M.d), r):
            for cols in combinations(range(M.n), r):
                if not _det_brute_force(M.minor(rows, cols).entries).singular:
                    best = r
    return best
