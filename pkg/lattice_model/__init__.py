"""
Combinatorial model of the affine type-A Coxeter complex 1-skeleton.
"""

from .coxeter import (
    ball_size,
    degree,
    edge_families,
    edge_from_signs,
    family_of,
    height,
    is_adjacent,
    is_vertex,
    make_vertex,
    negate,
    neighbors,
    step_between,
    step_matrix,
    translate,
    type_of,
)
from .models import EdgeStep, LatticeModelError, Vertex

__all__ = [
    "EdgeStep",
    "LatticeModelError",
    "Vertex",
    "ball_size",
    "degree",
    "edge_families",
    "edge_from_signs",
    "family_of",
    "height",
    "is_adjacent",
    "is_vertex",
    "make_vertex",
    "negate",
    "neighbors",
    "step_between",
    "step_matrix",
    "translate",
    "type_of",
]
