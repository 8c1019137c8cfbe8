"""Exact computations on tropical rank-two matrices.

Tropical rank and Barvinok rank two, canonical tropical lines, the
simplicial complexes T_{d,n} and B_{d,n}, their homology and shellings.
"""

from .barvinok_classes import class_dimension, class_intersect, crosspolytope_check
from .canonical_line import FaceDescriptor, LineTree, canonical_line, face_label
from .complex_gen import build_complex, enumerate_facets, enumerate_leaf_trees, transpose_duality_check
from .errors import *  # noqa: F401,F403
from .homology import Chain, HomologyProfile, boundary, reduced_homology, smith_normal_form
from .shelling import is_shelling, shelling_top_betti, snake_order
from .simplicial import SimplicialComplex, euler_characteristic, f_vector, purity_check
from .trop_core import TropicalMatrix, barvinok_rank_le2, trop_det, tropical_rank
from .trop_hull import build_hull_tree, tropical_segment

__version__ = "0.1.0"

__all__ = [
    "Chain",
    "FaceDescriptor",
    "HomologyProfile",
    "LineTree",
    "SimplicialComplex",
    "TropicalMatrix",
    "barvinok_rank_le2",
    "boundary",
    "build_complex",
    "build_hull_tree",
    "canonical_line",
    "class_dimension",
    "class_intersect",
    "crosspolytope_check",
    "enumerate_facets",
    "enumerate_leaf_trees",
    "euler_characteristic",
    "f_vector",
    "face_label",
    "is_shelling",
    "purity_check",
    "reduced_homology",
    "shelling_top_betti",
    "smith_normal_form",
    "snake_order",
    "trop_det",
    "tropical_rank",
    "tropical_segment",
    "transpose_duality_check",
]
