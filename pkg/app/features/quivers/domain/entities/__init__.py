"""Domain entities for the quivers feature."""
from .quiver import (
    DimVector,
    Quiver,
    QuiverSpec,
    all_orientations,
    build_quiver,
    dynkin_edges,
    standard_quiver,
)
from .roots import positive_roots, weyl_dimension
from .ar_quiver import ARGraph, Indec, build_ar_graph, indecomposables, type_a_nakayama

__all__ = [
    "DimVector",
    "Quiver",
    "QuiverSpec",
    "all_orientations",
    "build_quiver",
    "dynkin_edges",
    "standard_quiver",
    "positive_roots",
    "weyl_dimension",
    "ARGraph",
    "Indec",
    "build_ar_graph",
    "indecomposables",
    "type_a_nakayama",
]
