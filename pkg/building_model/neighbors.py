"""
Neighbor enumeration in the building: classes M with pL < M < L.
"""

import logging
from functools import lru_cache
from typing import List, Tuple

import numpy as np
from line_profiler import profile

from config.config import NEIGHBOR_CACHE_SIZE
from .lattice_class import canonicalize, determinant_valuation
from .models import ENTRY_BOUND, LatticeClass, LatticeClassError
from .subspaces import gaussian_binomial, pivot_columns, subspace_bases

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _sublattice_bases(dim: int, p: int) -> Tuple[Tuple[np.ndarray, int], ...]:
    """Bases N, in coordinates of L, of every lattice strictly between pL and L.

    Each nonzero proper subspace V of F_p^dim lifts to the lattice spanned by
    its RREF rows and p e_j for the non-pivot columns j. Paired with the
    exponent of p in det(N).
    """
    out: List[Tuple[np.ndarray, int]] = []
    for k in range(1, dim):
        for basis in subspace_bases(dim, k, p):
            pivots = set(pivot_columns(basis))
            unit = np.eye(dim, dtype=np.int64)
            columns = list(basis) + [p * unit[j] for j in range(dim) if j not in pivots]
            n = np.stack(columns, axis=1)
            n.setflags(write=False)
            out.append((n, dim - k))
    return tuple(out)


def neighbor_count(dim: int, p: int) -> int:
    """Number of nonzero proper subspaces of F_p^dim."""
    return sum(gaussian_binomial(dim, k, p) for k in range(1, dim))


@lru_cache(maxsize=NEIGHBOR_CACHE_SIZE)
@profile
def neighbors(lattice: LatticeClass) -> Tuple[LatticeClass, ...]:
    """All neighbors of a class, one per nonzero proper subspace of L/pL.

    The order follows the subspace enumeration (by dimension, then RREF basis),
    so it is deterministic.
    """
    p = lattice.prime
    h = lattice.matrix()
    if int(np.abs(h).max()) * p * lattice.dim >= ENTRY_BOUND:
        raise LatticeClassError(f"Neighbors of {lattice} would exceed the 64-bit bound")
    det = p ** determinant_valuation(lattice)
    return tuple(
        canonicalize(h @ n, p, det=det * p**extra)
        for n, extra in _sublattice_bases(lattice.dim, p)
    )


def is_adjacent(a: LatticeClass, b: LatticeClass) -> bool:
    return a != b and b in neighbors(a)
