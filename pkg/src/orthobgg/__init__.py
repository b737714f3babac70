"""
Parabolic Hasse graphs, BGG graphs and singular vectors for the orthogonal
Lie algebras so(2m) and so(2m+1) with a single crossed node, together with
an independent check of the associated Dirac operator sequence.
"""
from .liealg import AlgebraError, AlgebraSpec, Grading, Weight, build_algebra
from .parabolic import (
    LabeledGraph,
    ParabolicSpec,
    bgg_graph,
    regular_hasse_graph,
    singular_hasse_graph,
    standard_map_is_zero,
    true_verma_hom_exists,
)
from .weyl import GuardExceeded, SignedPermutation

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "AlgebraSpec",
    "Grading",
    "GuardExceeded",
    "LabeledGraph",
    "ParabolicSpec",
    "SignedPermutation",
    "Weight",
    "bgg_graph",
    "build_algebra",
    "regular_hasse_graph",
    "singular_hasse_graph",
    "standard_map_is_zero",
    "true_verma_hom_exists",
]
