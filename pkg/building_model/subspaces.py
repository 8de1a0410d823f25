"""
Subspaces of F_p^d, enumerated through their reduced row-echelon bases.
"""

from itertools import combinations, product
from typing import Iterator, List

import numpy as np


def gaussian_binomial(d: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^d."""
    if k < 0 or k > d:
        return 0
    num, den = 1, 1
    for i in range(k):
        num *= p ** (d - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def _free_positions(pivots: List[int], d: int) -> List[tuple]:
    """Entries of an RREF basis with these pivots that may take any value."""
    pivot_set = set(pivots)
    return [
        (row, col)
        for row, pivot in enumerate(pivots)
        for col in range(pivot + 1, d)
        if col not in pivot_set
    ]


def subspace_bases(d: int, k: int, p: int) -> Iterator[np.ndarray]:
    """Yield the RREF basis (k x d, int64) of every k-dimensional subspace once.

    Bases come ordered by pivot columns, then by the free entries in
    lexicographic order, so the enumeration is deterministic.
    """
    for pivots in combinations(range(d), k):
        free = _free_positions(list(pivots), d)
        for values in product(range(p), repeat=len(free)):
            basis = np.zeros((k, d), dtype=np.int64)
            for row, pivot in enumerate(pivots):
                basis[row, pivot] = 1
            for (row, col), value in zip(free, values):
                basis[row, col] = value
            yield basis


def pivot_columns(basis: np.ndarray) -> List[int]:
    """Pivot column of each row of an RREF basis."""
    return [int(np.flatnonzero(row)[0]) for row in basis]
