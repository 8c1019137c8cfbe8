"""Snake ordering of ternary strings and shelling-order verification."""

from __future__ import annotations

from itertools import product

from .errors import NotAShelling, NotPure, OrderMismatch
from .simplicial import SimplicialComplex, maximal_faces


def snake_order(n: int) -> list:
    """All ternary strings of length ``n`` (tuples over 1, 2, 3) in snake order.

    Odd leading letters are followed by the tails in snake order, even ones
    by the tails in reverse.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return [(1,), (2,), (3,)]
    tails = snake_order(n - 1)
    out = []
    for a in (1, 2, 3):
        out += [(a,) + t for t in (tails if a % 2 else tails[::-1])]
    return out


def constant_strings(n: int) -> list:
    return [(a,) * n for a in (1, 2, 3)]


def string_facet(x) -> tuple:
    """Vertex set of the cell of string ``x``: vertex ``3*j + (x_j - 1)`` for point j."""
    return tuple(3 * j + (a - 1) for j, a in enumerate(x) if a)


def ternary_string_complex(n: int, removed=None) -> tuple:
    """All length-n strings over {1,2,3} except ``removed``, in snake order.

    Returns ``(K, ordered_facets)``.  With the three constant strings
    removed this is T_{3,n} with vertex ``(point j, leaf i)`` at index ``3j + i - 1``.
    """
    removed = set(constant_strings(n) if removed is None else removed)
    order = [x for x in snake_order(n) if x not in removed]
    facets = [string_facet(x) for x in order]
    return SimplicialComplex(3 * n, tuple(facets)), facets


def _check_order(K: SimplicialComplex, order) -> list:
    order = [tuple(sorted(f)) for f in order]
    if sorted(order) != sorted(K.facets):
        raise OrderMismatch("order is not a permutation of the facets")
    sizes = {len(f) for f in order}
    if len(sizes) > 1:
        raise NotPure("shelling needs a pure complex")
    return order


def _shared_ridge_vertices(order):
    """For each facet, the vertices v whose ridge F - v lies in an earlier facet."""
    seen = set()
    out = []
    for f in order:
        ridges = [f[:k] + f[k + 1:] for k in range(len(f))]
        out.append({f[k] for k, r in enumerate(ridges) if r in seen})
        seen.update(ridges)
    return out


def is_shelling(K: SimplicialComplex, order):
    """Check a facet order against the pairwise shelling condition.

    For every later facet ``F_j`` and earlier ``F_i`` there must be an earlier
    ``F_k`` meeting ``F_j`` in a ridge that contains ``F_i & F_j``.  Returns
    ``(True, None)`` or ``(False, (i, j))`` for the first violation.
    """
    order = _check_order(K, order)
    shared = _shared_ridge_vertices(order)
    containing = {}
    for i, f in enumerate(order):
        for v in f:
            containing.setdefault(v, []).append(i)
    for j in range(1, len(order)):
        vj = shared[j]
        if not vj:
            return False, (0, j)
        # F_i & F_j fits in a shared ridge F_j - v iff v is not in F_i
        cands = None
        for v in vj:
            s = {i for i in containing[v] if i < j}
            cands = s if cands is None else cands & s
            if not cands:
                break
        if cands:
            return False, (min(cands), j)
    return True, None


def is_shelling_by_union(K: SimplicialComplex, order) -> bool:
    """Oracle: each facet meets the union of its predecessors in a pure codim-one complex."""
    order = _check_order(K, order)
    for j in range(1, len(order)):
        fj = set(order[j])
        inter = [tuple(sorted(fj & set(order[i]))) for i in range(j)]
        tops = maximal_faces([f for f in inter if f])
        if not tops or any(len(f) != len(fj) - 1 for f in tops):
            return False
    return True


def shelling_top_betti(K: SimplicialComplex, order) -> int:
    """Number of facets whose whole boundary is already covered when they are added."""
    ok, bad = is_shelling(K, order)
    if not ok:
        raise NotAShelling(f"first violation at {bad}")
    order = [tuple(sorted(f)) for f in order]
    shared = _shared_ridge_vertices(order)
    return sum(1 for f, s in zip(order, shared) if len(s) == len(f))


def all_removal_subsets(n: int) -> list:
    consts = constant_strings(n)
    return [tuple(c for c, keep in zip(consts, mask) if keep) for mask in product((0, 1), repeat=3)]
