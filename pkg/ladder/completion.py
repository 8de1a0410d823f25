"""
Constructive triangle, quadrangle and square-centre completions on ladders.

Each construction returns one specific witness; callers that only need some
valid witness should check postconditions rather than compare against these.
"""

import logging
from typing import FrozenSet, Tuple

from lattice_model import (
    EdgeStep,
    Vertex,
    height,
    is_adjacent,
    step_between,
    translate,
)

from .ladder import apply_step, ladder_of, vertex_of

logger = logging.getLogger(__name__)


class CompletionError(ValueError):
    """Raised when a completion is requested outside its preconditions."""


def _shift(v: Vertex, positive: FrozenSet[int]) -> Vertex:
    return vertex_of(apply_step(ladder_of(v), EdgeStep(positive, v.rank)))


def _omits_bottom_misses_top(a: Vertex, step: EdgeStep) -> bool:
    """True when the step raises part, not all, of a's bottom rung and none of its top."""
    rungs = ladder_of(a)
    bottom, top = rungs.bottom, rungs.top
    return not bottom <= step.positive_set and not (top & step.positive_set)


def triangle_complete(a: Vertex, b: Vertex) -> Vertex:
    """Common neighbor one level closer to the origin for an equal-height edge.

    Args:
        a: Vertex of height h >= 1.
        b: Vertex adjacent to a, also of height h.

    Returns:
        C adjacent to both with height h - 1: orient so the step a -> b omits
        part of a's bottom rung and misses its top rung, then raise the rest of
        a's bottom rung starting from b.
    """
    if a == b:
        raise CompletionError("triangle_complete: A and B must be distinct")
    if not is_adjacent(a, b):
        raise CompletionError(f"triangle_complete: {a} and {b} are not adjacent")
    h = height(a)
    if height(b) != h:
        raise CompletionError(
            f"triangle_complete: heights differ ({h} vs {height(b)})"
        )
    if h < 1:
        raise CompletionError("triangle_complete: height must be at least 1")

    for low, high in ((a, b), (b, a)):
        step = step_between(low, high)
        if _omits_bottom_misses_top(low, step):
            s_min = ladder_of(low).bottom - step.positive_set
            return _shift(high, s_min)

    raise CompletionError(
        f"triangle_complete: neither orientation of {a} -- {b} keeps the top rung fixed"
    )


def quadrangle_complete(x: Vertex, y: Vertex, z: Vertex) -> Vertex:
    """Fourth corner of the quadrangle below X.

    Args:
        x: Vertex of height h + 1 >= 2.
        y: Neighbor of x of height h.
        z: Another neighbor of x of height h.

    Returns:
        W of height h - 1 adjacent to y and z, obtained from x's ladder by
        raising the bottom rung by two and the strictly middle rungs by one.
    """
    if y == z:
        raise CompletionError("quadrangle_complete: Y and Z must be distinct")
    h_plus = height(x)
    if h_plus < 2:
        raise CompletionError(
            f"quadrangle_complete: height(X) must be at least 2, got {h_plus}"
        )
    rungs = ladder_of(x)
    for name, other in (("Y", y), ("Z", z)):
        if not is_adjacent(x, other):
            raise CompletionError(f"quadrangle_complete: {name} is not adjacent to X")
        if height(other) != h_plus - 1:
            raise CompletionError(
                f"quadrangle_complete: height({name}) must be {h_plus - 1}"
            )
        step = step_between(x, other)
        if not rungs.bottom <= step.positive_set or rungs.top & step.positive_set:
            # Forced by the height drop; seeing this means the model is broken.
            raise CompletionError(
                f"quadrangle_complete: step X -> {name} does not span the bottom rung "
                "while missing the top rung"
            )

    top = max(rungs.rungs)
    raised = [
        r + 2 if r == 0 else (r + 1 if r < top else r) for r in rungs.rungs
    ]
    shift = -sum(raised)
    n = x.rank
    return Vertex(tuple((n + 1) * r + shift for r in raised))


def square_center(z: Vertex, y: Vertex, y_prime: Vertex) -> Tuple[Vertex, Vertex]:
    """Centre edge of an induced 4-cycle z - y - a - y'.

    With S = step z -> y and S' = step z -> y', the cycle has no diagonals only
    when (S | S')^c, S - S', S' - S and S & S' are all nonempty. The endpoints
    of the centre edge are z raised on S & S' and z raised on S | S'.
    """
    s_y = step_between(z, y).positive_set
    s_y_prime = step_between(z, y_prime).positive_set
    everything = frozenset(range(z.rank + 1))
    parts = {
        "complement of the union": everything - (s_y | s_y_prime),
        "S_y minus S_y'": s_y - s_y_prime,
        "S_y' minus S_y": s_y_prime - s_y,
        "intersection": s_y & s_y_prime,
    }
    for label, part in parts.items():
        if not part:
            raise CompletionError(f"square_center: the {label} is empty")
    low = translate(z, Vertex(EdgeStep(s_y & s_y_prime, z.rank).vector))
    high = translate(z, Vertex(EdgeStep(s_y | s_y_prime, z.rank).vector))
    logger.debug("square centre of %s: %s -- %s", z, low, high)
    return low, high
