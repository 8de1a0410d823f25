"""
Membership, adjacency and neighbor enumeration for the affine type-A 1-skeleton.
"""

from functools import lru_cache
from math import comb
from typing import List, Sequence, Tuple

import numpy as np

from .models import EdgeStep, LatticeModelError, Vertex, check_bounds


def _require_same_rank(u: Vertex, v: Vertex) -> int:
    if u.rank != v.rank:
        raise LatticeModelError(f"Rank mismatch: {u.rank} vs {v.rank}")
    return u.rank


def is_vertex(coords: Sequence[int], n: int) -> bool:
    """Check the vertex membership conditions.

    Args:
        coords: Candidate integer coordinates.
        n: Rank; coords must have length n+1.

    Returns:
        True iff the coordinates sum to zero and share one residue mod n+1.
    """
    if len(coords) != n + 1:
        raise LatticeModelError(
            f"Expected {n + 1} coordinates for rank {n}, got {len(coords)}"
        )
    if sum(coords) != 0:
        return False
    residue = coords[0] % (n + 1)
    return all(value % (n + 1) == residue for value in coords)


def make_vertex(coords: Sequence[int], n: int) -> Vertex:
    """Build a validated Vertex."""
    if not is_vertex(coords, n):
        raise LatticeModelError(f"{tuple(coords)} is not a vertex of rank {n}")
    check_bounds(coords)
    return Vertex(tuple(int(value) for value in coords))


def edge_from_signs(signs: Sequence[str]) -> EdgeStep:
    """Return the unique edge step with the given sign pattern.

    Args:
        signs: One of "+" or "-" per coordinate.

    Returns:
        EdgeStep whose vector holds n+1-k on the "+" and -k on the "-".
    """
    return EdgeStep.parse("".join(signs))


def _is_edge_difference(diff: Sequence[int], n: int) -> bool:
    if sum(diff) != 0:
        return False
    residue = diff[0] % (n + 1)
    if any(value % (n + 1) != residue for value in diff):
        return False
    return max(diff) - min(diff) == n + 1


def is_adjacent(u: Vertex, v: Vertex) -> bool:
    n = _require_same_rank(u, v)
    diff = [b - a for a, b in zip(u.coords, v.coords)]
    return _is_edge_difference(diff, n)


def step_between(u: Vertex, v: Vertex) -> EdgeStep:
    """Return the step S with v = u + vector(S); u and v must be adjacent."""
    if not is_adjacent(u, v):
        raise LatticeModelError(f"{u} and {v} are not adjacent")
    return EdgeStep(
        frozenset(i for i, (a, b) in enumerate(zip(u.coords, v.coords)) if b > a),
        u.rank,
    )


@lru_cache(maxsize=None)
def step_matrix(n: int) -> np.ndarray:
    """Edge vectors of rank n as rows, ordered by positive-set bitmask."""
    masks = range(1, 2 ** (n + 1) - 1)
    rows = [EdgeStep.from_bitmask(mask, n).vector for mask in masks]
    matrix = np.array(rows, dtype=np.int64)
    matrix.setflags(write=False)
    return matrix


def neighbors(v: Vertex) -> Tuple[Vertex, ...]:
    """All 2^{n+1} - 2 neighbors, one per nonempty proper subset, in bitmask order."""
    check_bounds(v.coords)
    moved = np.asarray(v.coords, dtype=np.int64) + step_matrix(v.rank)
    return tuple(Vertex(tuple(row)) for row in moved.tolist())


def height(v: Vertex) -> int:
    """Graph distance from the origin: (max - min coordinate) / (n + 1)."""
    return (max(v.coords) - min(v.coords)) // (v.rank + 1)


def translate(v: Vertex, t: Vertex) -> Vertex:
    _require_same_rank(v, t)
    coords = tuple(a + b for a, b in zip(v.coords, t.coords))
    check_bounds(coords)
    return Vertex(coords)


def negate(v: Vertex) -> Vertex:
    return Vertex(tuple(-value for value in v.coords))


def type_of(v: Vertex) -> int:
    """The common residue of the coordinates mod n+1."""
    return v.coords[0] % (v.rank + 1)


def edge_families(n: int) -> List[Tuple[int, ...]]:
    """One representative per ± family of edge vectors, up to permutation.

    A step raising k coordinates and one raising n+1-k coordinates are negatives
    of each other after permuting, so the families are indexed by
    k = 1..ceil(n/2). Representatives list the positive entries first.
    """
    return [EdgeStep.of(range(k), n).vector for k in range(1, (n + 1) // 2 + 1)]


def family_of(vector: Sequence[int]) -> Tuple[int, ...]:
    """Map an edge vector to its family representative."""
    n = len(vector) - 1
    k = sum(1 for value in vector if value > 0)
    return EdgeStep.of(range(min(k, n + 1 - k)), n).vector


def ball_size(n: int, radius: int) -> int:
    """Number of vertices of height at most radius (ladders with max rung <= radius)."""
    return (radius + 1) ** (n + 1) - radius ** (n + 1)


def degree(n: int) -> int:
    return sum(comb(n + 1, k) for k in range(1, n + 1))
