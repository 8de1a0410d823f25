"""
The building of type A~3 (and experimentally higher) as homothety classes of lattices.
"""

from .apartment import embed_apartment
from .lattice_class import (
    base_class,
    canonicalize,
    check_prime,
    class_distance,
    distance_to_base,
    divisor_profile,
    type_of,
    valuation,
)
from .models import DivisorProfile, LatticeClass, LatticeClassError
from .neighbors import is_adjacent, neighbor_count, neighbors
from .square_lemma import SquareLemmaViolation, find_square_center, verify_square_lemma
from .subspaces import gaussian_binomial, pivot_columns, subspace_bases

__all__ = [
    "DivisorProfile",
    "LatticeClass",
    "LatticeClassError",
    "SquareLemmaViolation",
    "base_class",
    "canonicalize",
    "check_prime",
    "class_distance",
    "distance_to_base",
    "divisor_profile",
    "embed_apartment",
    "find_square_center",
    "gaussian_binomial",
    "is_adjacent",
    "neighbor_count",
    "neighbors",
    "pivot_columns",
    "subspace_bases",
    "type_of",
    "valuation",
    "verify_square_lemma",
]
