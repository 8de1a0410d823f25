"""
Conversions between vertices and ladders, and ladder-side edge traversal.
"""

from lattice_model import EdgeStep, LatticeModelError, Vertex

from .models import Ladder


def ladder_of(v: Vertex) -> Ladder:
    """Place each coordinate on its rung: (x_i - min_j x_j) / (n + 1)."""
    low = min(v.coords)
    return Ladder(tuple((x - low) // (v.rank + 1) for x in v.coords))


def vertex_of(ladder: Ladder) -> Vertex:
    """Inverse of ladder_of: the unique sum-zero representative."""
    n = ladder.rank
    shift = -sum(ladder.rungs)
    return Vertex(tuple((n + 1) * r + shift for r in ladder.rungs))


def apply_step(ladder: Ladder, step: EdgeStep) -> Ladder:
    """Raise the coordinates of the step by one rung and renormalize."""
    if step.rank != ladder.rank:
        raise LatticeModelError(f"Rank mismatch: {ladder.rank} vs {step.rank}")
    raised = [r + 1 if i in step.positive_set else r for i, r in enumerate(ladder.rungs)]
    return Ladder.normalized(raised)


def ladder_height(ladder: Ladder) -> int:
    return max(ladder.rungs)
