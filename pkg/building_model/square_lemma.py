"""
Centres of induced 4-cycles: an edge whose endpoints see all four cycle vertices.

Works on any ball whose vertices carry a type in range(n_types), so the same
code runs on the rank-3 lattice model and on the building.
"""

import logging
from itertools import combinations
from typing import Callable, List, Optional, Set, Tuple

from graph_engine import Ball, ConditionReport, NeighborOracle, induced_4cycles_through
from graph_engine.models import V

logger = logging.getLogger(__name__)


class SquareLemmaViolation(Exception):
    """An induced 4-cycle without a correctly typed centre edge."""

    def __init__(self, cycle: Tuple, reason: str) -> None:
        super().__init__(f"{', '.join(map(str, cycle))}: {reason}")
        self.cycle = cycle
        self.reason = reason


def find_square_center(
    ball: Ball,
    cycle: Tuple[V, V, V, V],
    type_of: Callable[[V], int],
    oracle: Optional[NeighborOracle] = None,
    n_types: int = 4,
) -> Tuple[V, V]:
    """Return the smallest centre edge of an induced 4-cycle.

    Args:
        ball: Ball recording the neighborhoods of the cycle vertices.
        cycle: (v, a, b, c) with consecutive vertices adjacent, no diagonals.
        type_of: Vertex type function.
        oracle: Read neighborhoods from here instead of the ball.
        n_types: Number of vertex types.

    Returns:
        Adjacent pair (x, y), x < y, both adjacent to all four vertices, typed
        with the two types the cycle does not use.

    Raises:
        SquareLemmaViolation: If opposite vertices differ in type or no such
            edge exists.
    """

    def around(x: V) -> Set[V]:
        return set(oracle(x)) if oracle is not None else set(ball.neighbors_in_ball(x))

    types = [type_of(x) for x in cycle]
    if types[0] != types[2] or types[1] != types[3] or types[0] == types[1]:
        raise SquareLemmaViolation(cycle, f"cycle types {types} are not t, t', t, t'")
    absent = set(range(n_types)) - {types[0], types[1]}

    common = sorted(set.intersection(*(around(x) for x in cycle)))
    mistyped = None
    for x, y in combinations(common, 2):
        if y not in around(x):
            continue
        if {type_of(x), type_of(y)} == absent:
            return x, y
        mistyped = (x, y)

    if mistyped is not None:
        raise SquareLemmaViolation(
            cycle, f"centre edge {mistyped[0]} -- {mistyped[1]} is not typed {sorted(absent)}"
        )
    raise SquareLemmaViolation(cycle, "no edge is adjacent to all four vertices")


def verify_square_lemma(
    ball: Ball,
    type_of: Callable[[V], int],
    center: Optional[V] = None,
    *,
    oracle: Optional[NeighborOracle] = None,
    n_types: int = 4,
    fail_fast: bool = False,
    format_id: Callable = str,
) -> ConditionReport:
    """Look for a centre edge on every induced 4-cycle through ``center``.

    ``center`` defaults to the ball's base; a radius of 2 around it suffices.
    """
    start = ball.base if center is None else center
    cycles = induced_4cycles_through(ball, start)
    violations: List[List[str]] = []
    for cycle in cycles:
        try:
            find_square_center(ball, cycle, type_of, oracle, n_types)
        except SquareLemmaViolation as exc:
            logger.warning("Square lemma fails: %s", exc)
            violations.append([format_id(x) for x in cycle])
            if fail_fast:
                break
    logger.info("%d induced 4-cycle(s) through %s", len(cycles), format_id(start))
    return ConditionReport(
        condition="square",
        center=format_id(start),
        local_only=True,
        instances_checked=len(cycles),
        violations=violations,
    )
