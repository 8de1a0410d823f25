"""
Induced 4-cycle enumeration.
"""

from itertools import combinations
from typing import List, Tuple

from .models import Ball, V


def induced_4cycles_through(ball: Ball, v: V) -> List[Tuple[V, V, V, V]]:
    """All 4-cycles (v, a, b, c) without diagonals, each reported once.

    Consecutive vertices are adjacent, v-b and a-c are not. The reflection
    (v, c, b, a) is the same cycle, so a < c in ball order. The neighborhoods
    of v, a and c must be fully recorded, which holds when v is the base and
    the radius is at least 2.
    """
    i = ball.index[v]
    around = set(ball.adjacency[i])
    adjacency = {j: set(ball.adjacency[j]) for j in around}
    cycles = []
    for a, c in combinations(sorted(around), 2):
        if c in adjacency[a]:
            continue
        for b in sorted(adjacency[a] & adjacency[c]):
            if b == i or b in around:
                continue
            cycles.append(
                (ball.vertices[i], ball.vertices[a], ball.vertices[b], ball.vertices[c])
            )
    return cycles
