"""Abstract simplicial complexes given by their facets."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations


@dataclass
class SimplicialComplex:
    """Facets are sorted vertex tuples; faces are generated on demand.

    ``vertices`` and ``facet_labels`` optionally carry geometric data (ray
    matrices, face descriptors) aligned with vertex indices and facets.
    """

    vertex_count: int
    facets: tuple
    vertices: list = field(default=None, repr=False)
    facet_labels: list = field(default=None, repr=False)

    def __post_init__(self):
        self.facets = tuple(tuple(sorted(f)) for f in self.facets)

    @classmethod
    def from_facets(cls, facets, **kw) -> "SimplicialComplex":
        facets = [tuple(sorted(f)) for f in facets]
        verts = sorted({v for f in facets for v in f})
        if verts != list(range(len(verts))):
            relabel = {v: i for i, v in enumerate(verts)}
            facets = [tuple(relabel[v] for v in f) for f in facets]
        return cls(len(verts), tuple(sorted(set(facets))), **kw)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1 if self.facets else -1

    def faces(self, k: int) -> list:
        """All faces with ``k + 1`` vertices, sorted."""
        if k < 0:
            return [()]
        out = set()
        for f in self.facets:
            if len(f) > k:
                out.update(combinations(f, k + 1))
        return sorted(out)

    @cached_property
    def all_faces(self) -> list:
        return [self.faces(k) for k in range(self.dim + 1)]

    def is_face(self, face) -> bool:
        face = tuple(sorted(face))
        return face in self._face_sets[len(face) - 1] if 0 < len(face) <= self.dim + 1 else len(face) == 0

    @cached_property
    def _face_sets(self) -> list:
        return [set(fs) for fs in self.all_faces]

    def sorted_facets(self) -> list:
        return sorted(self.facets)

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.sorted_facets() == other.sorted_facets()

    def to_json(self) -> dict:
        out = {"facets": [list(f) for f in self.facets]}
        if self.vertices is not None:
            out = {"vertices": [[list(row) for row in v] for v in self.vertices], **out}
        return out

    def restrict(self, keep) -> "SimplicialComplex":
        """Subcomplex generated by the facets at indices ``keep`` (vertices re-indexed)."""
        keep = list(keep)
        used = sorted({v for i in keep for v in self.facets[i]})
        relabel = {v: k for k, v in enumerate(used)}
        facets = tuple(tuple(relabel[v] for v in self.facets[i]) for i in keep)
        verts = [self.vertices[v] for v in used] if self.vertices is not None else None
        labels = [self.facet_labels[i] for i in keep] if self.facet_labels is not None else None
        return SimplicialComplex(len(used), facets, verts, labels)


def f_vector(K: SimplicialComplex) -> list:
    """Face counts ``f_k`` (faces with k+1 vertices) for k = 0..dim."""
    return [len(K.faces(k)) for k in range(K.dim + 1)]


def euler_characteristic(K: SimplicialComplex) -> int:
    """Reduced Euler characteristic: sum (-1)^k f_k - 1."""
    return sum((-1) ** k * f for k, f in enumerate(f_vector(K))) - 1


def maximal_faces(facets) -> list:
    fs = sorted({tuple(sorted(f)) for f in facets}, key=len, reverse=True)
    out = []
    for f in fs:
        sf = set(f)
        if not any(sf < set(g) for g in out):
            out.append(f)
    return out


def purity_check(K: SimplicialComplex, expected_dim: int) -> bool:
    sizes = {len(f) for f in K.facets}
    if len(sizes) == 1:
        # distinct sets of one size never contain each other
        return sizes == {expected_dim + 1}
    return all(len(f) == expected_dim + 1 for f in maximal_faces(K.facets))


def fan_validity(K: SimplicialComplex, label_of_sample=None) -> bool:
    """Check that the facets glue as a simplicial fan.

    Every pairwise intersection must be a face of both facets (automatic for
    vertex sets, kept as a sanity check), and, when ``label_of_sample`` is
    given, distinct faces must have distinct relative-interior labels:
    ``label_of_sample(face)`` maps a vertex tuple to the combinatorial type of
    a point in its relative interior.
    """
    faces = K.all_faces
    face_sets = [set(fs) for fs in faces]
    for f in K.facets:
        for g in K.facets:
            common = tuple(sorted(set(f) & set(g)))
            if common and common not in face_sets[len(common) - 1]:
                return False
    if label_of_sample is None:
        return True
    seen = {}
    for fs in faces:
        for face in fs:
            lab = label_of_sample(face)
            if lab in seen and seen[lab] != face:
                return False
            seen[lab] = face
    return True
