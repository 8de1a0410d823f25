"""
Breadth-first ball generation from a neighbor oracle, and exact distances inside a ball.
"""

import logging
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence

from line_profiler import profile
from tqdm import tqdm

from config.config import MAX_VERTICES, THREADS
from .models import Ball, NeighborOracle, V

logger = logging.getLogger(__name__)


class BallLimitExceeded(RuntimeError):
    """Raised when ball generation passes the vertex ceiling."""

    def __init__(self, limit: int, discovered: int, last_complete_layer: int) -> None:
        super().__init__(
            f"Vertex ceiling {limit} exceeded: {discovered} vertices discovered, "
            f"layers 0..{last_complete_layer} complete"
        )
        self.limit = limit
        self.discovered = discovered
        self.last_complete_layer = last_complete_layer


def _expand_layer(
    oracle: NeighborOracle,
    layer: Sequence[V],
    threads: int,
    quiet: bool,
    depth: int,
) -> List[Sequence[V]]:
    """Query the oracle for every vertex of a layer, preserving order."""
    if threads <= 1 or len(layer) < 2 * threads:
        iterator = map(oracle, layer)
        if not quiet:
            iterator = tqdm(iterator, total=len(layer), desc=f"Expanding layer {depth}")
        return list(iterator)

    with ThreadPoolExecutor(max_workers=threads) as executor:
        iterator = executor.map(oracle, layer)
        if not quiet:
            iterator = tqdm(iterator, total=len(layer), desc=f"Expanding layer {depth}")
        return list(iterator)


@profile
def generate_ball(
    oracle: NeighborOracle,
    base: V,
    radius: int,
    *,
    induced: bool = True,
    max_vertices: Optional[int] = None,
    threads: Optional[int] = None,
    quiet: bool = True,
) -> Ball:
    """Breadth-first closure of ``base`` up to ``radius``.

    Args:
        oracle: Deterministic neighbor function of the (possibly infinite) graph.
        base: Centre of the ball.
        radius: Maximum distance from base to include.
        induced: Also query vertices at distance == radius so that edges between
            them are recorded, making the result the induced subgraph.
        max_vertices: Vertex ceiling; defaults to the configured limit.
        threads: Worker threads for oracle calls; defaults to the configured count.
        quiet: If True, suppress progress bars.

    Returns:
        Ball with exact distance labels. Layers are sorted so the result does not
        depend on oracle order or thread scheduling.
    """
    if radius < 0:
        raise ValueError(f"Radius must be nonnegative, got {radius}")
    limit = MAX_VERTICES if max_vertices is None else max_vertices
    workers = THREADS if threads is None else threads

    dist: Dict[V, int] = {base: 0}
    order: List[V] = [base]
    neighbor_lists: Dict[V, Sequence[V]] = {}
    layer: List[V] = [base]

    for depth in range(radius + 1):
        if depth == radius and not induced:
            break
        results = _expand_layer(oracle, layer, workers, quiet, depth)
        next_layer = set()
        for v, found in zip(layer, results):
            neighbor_lists[v] = found
            if depth == radius:
                continue
            for w in found:
                if w not in dist:
                    next_layer.add(w)
        if depth == radius:
            break
        layer = sorted(next_layer)
        for w in layer:
            dist[w] = depth + 1
        order.extend(layer)
        if len(order) > limit:
            raise BallLimitExceeded(limit, len(order), depth + 1)
        logger.debug("layer %d: %d vertices", depth + 1, len(layer))

    index = {v: i for i, v in enumerate(order)}
    rows: List[set] = [set() for _ in order]
    for v, found in neighbor_lists.items():
        i = index[v]
        for w in found:
            j = index.get(w)
            if j is not None and j != i:
                rows[i].add(j)
                rows[j].add(i)

    return Ball(
        base=base,
        radius=radius,
        vertices=tuple(order),
        adjacency=tuple(tuple(sorted(row)) for row in rows),
        dist=tuple(dist[v] for v in order),
        induced=induced,
        index=index,
    )


def bfs_distance(ball: Ball, u: V, v: V) -> Optional[int]:
    """Exact path-metric distance between two ball vertices, or None if unknown.

    A breadth-first search inside the ball gives an upper bound. The result is
    returned only when it is certified: either it meets the lower bound
    |dist(u) - dist(v)|, or every path leaving the recorded part of the ball is
    at least as long.
    """
    if u not in ball or v not in ball:
        return None
    start, goal = ball.index[u], ball.index[v]
    if start == goal:
        return 0

    seen = {start: 0}
    queue = deque([start])
    found: Optional[int] = None
    while queue:
        i = queue.popleft()
        for j in ball.adjacency[i]:
            if j not in seen:
                seen[j] = seen[i] + 1
                if j == goal:
                    found = seen[j]
                    break
                queue.append(j)
        if found is not None:
            break

    du, dv = ball.dist[start], ball.dist[goal]
    if found is None:
        return None
    if found == abs(du - dv):
        return found
    # Cheapest excursion through unrecorded edges: out to the rim and back.
    rim = ball.radius + 1 if ball.induced else ball.radius
    escape = (rim - du) + (rim - dv) + (0 if ball.induced else 1)
    if found <= escape:
        return found
    return None
