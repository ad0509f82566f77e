"""Exact combinatorics of k-triangulations of a convex polygon.

The package provides the staircase-diagram representation of
k-triangulations with exact crossing tests and brute-force enumeration,
Catalan-determinant counting, the generating trees for k = 2 (both on
triangulations and on pairs of non-crossing Dyck paths, with their common
succession rule) and for arbitrary k, and the explicit bijection between
2-triangulations of an n-gon and pairs of non-crossing Dyck paths of
semilength n-4.
"""

from .bijection import ColoredDiagram, color_diagram, from_paths, to_paths, to_paths_via_tree
from .errors import DomainError, GuardExceeded, StructuralError
from .gentree2 import (
    GrowthChoice,
    PairGrowthChoice,
    ROOT_PAIR,
    children2,
    corner,
    label2,
    label_children,
    pair_children,
    pair_label,
    pair_parent,
    parent2,
    pentagon_root,
)
from .gentree_k import (
    GrowthChoiceK,
    ParentFrame,
    anchor_rows,
    children_k,
    corner_k,
    enumerate_tree,
    parent_frame,
    parent_k,
    tree_root,
)
from .paths import (
    DyckPath,
    PairEncoding,
    PathTuple,
    all_paths,
    catalan,
    catalan_determinant,
    dominates,
    encode_pair,
    enumerate_tuples,
    from_exponents,
    s_param,
    to_exponents,
)
from .polygon import (
    DiagonalSet,
    KTriangulation,
    PolygonContext,
    check_structure_lemmas,
    complete_to_maximal,
    degree,
    enumerate_brute,
    has_crossing,
    is_cell,
    is_k_triangulation,
    is_t_crossing,
    staircase_cells,
    trivial_diagonals,
    wrap_chord,
)

__version__ = "0.1.0"

__all__ = [
    "ColoredDiagram",
    "DiagonalSet",
    "DomainError",
    "DyckPath",
    "GrowthChoice",
    "GrowthChoiceK",
    "GuardExceeded",
    "KTriangulation",
    "PairEncoding",
    "PairGrowthChoice",
    "ParentFrame",
    "PathTuple",
    "PolygonContext",
    "ROOT_PAIR",
    "StructuralError",
    "all_paths",
    "anchor_rows",
    "catalan",
    "catalan_determinant",
    "check_structure_lemmas",
    "children2",
    "children_k",
    "color_diagram",
    "complete_to_maximal",
    "corner",
    "corner_k",
    "degree",
    "dominates",
    "encode_pair",
    "enumerate_brute",
    "enumerate_tree",
    "enumerate_tuples",
    "from_exponents",
    "from_paths",
    "has_crossing",
    "is_cell",
    "is_k_triangulation",
    "is_t_crossing",
    "label2",
    "label_children",
    "pair_children",
    "pair_label",
    "pair_parent",
    "parent2",
    "parent_frame",
    "parent_k",
    "pentagon_root",
    "s_param",
    "staircase_cells",
    "to_exponents",
    "to_paths",
    "to_paths_via_tree",
    "tree_root",
    "trivial_diagonals",
    "wrap_chord",
]
