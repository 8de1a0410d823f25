"""
Triangle and quadrangle condition checkers over a ball.

Distances are measured from the ball's base. The full checks restrict the
level m so that every referenced distance is exact inside the ball; the local
checks look only at m = 2 (triangle) and m + 1 = 3 (quadrangle).
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from line_profiler import profile
from tqdm import tqdm

from config.config import THREADS
from .models import Ball, ConditionReport, NeighborOracle

logger = logging.getLogger(__name__)

MIN_CHECK_RADIUS = 3

Witness = Tuple[int, ...]
ChunkResult = Tuple[int, List[Witness]]


class RadiusTooSmallError(ValueError):
    """Raised when a ball is too small for the requested check."""


def _require_radius(ball: Ball) -> None:
    if ball.radius < MIN_CHECK_RADIUS:
        raise RadiusTooSmallError(
            f"Condition checks need radius >= {MIN_CHECK_RADIUS}, got {ball.radius}"
        )


def _lower_neighbors(
    ball: Ball, oracle: Optional[NeighborOracle]
) -> Callable[[int], FrozenSet[int]]:
    """Memoized map from a vertex index to its neighbors one level closer to base.

    With an oracle, candidates come from the oracle's neighbor list, so
    vertices near the rim cannot lose candidates that the ball failed to record.
    """
    memo: Dict[int, FrozenSet[int]] = {}

    def lower(i: int) -> FrozenSet[int]:
        cached = memo.get(i)
        if cached is not None:
            return cached
        target = ball.dist[i] - 1
        if oracle is None:
            candidates = ball.adjacency[i]
        else:
            candidates = [
                j for j in map(ball.index.get, oracle(ball.vertices[i])) if j is not None
            ]
        found = frozenset(j for j in candidates if ball.dist[j] == target)
        memo[i] = found
        return found

    return lower


def _sweep(
    items: Sequence,
    work: Callable[[Sequence], ChunkResult],
    threads: int,
    quiet: bool,
    desc: str,
) -> ChunkResult:
    """Split items into contiguous chunks, run them concurrently, merge in order."""
    if not items:
        return 0, []
    n_chunks = max(1, min(len(items), threads * 4))
    size = -(-len(items) // n_chunks)
    chunks = [items[i : i + size] for i in range(0, len(items), size)]

    if threads <= 1 or len(chunks) == 1:
        results = map(work, chunks)
        if not quiet:
            results = tqdm(results, total=len(chunks), desc=desc)
        merged = list(results)
    else:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            results = executor.map(work, chunks)
            if not quiet:
                results = tqdm(results, total=len(chunks), desc=desc)
            merged = list(results)

    checked = sum(count for count, _ in merged)
    violations = sorted(w for _, found in merged for w in found)
    return checked, violations


def _report(
    ball: Ball,
    condition: str,
    local_only: bool,
    checked: int,
    violations: List[Witness],
    fail_fast: bool,
    format_id: Callable,
) -> ConditionReport:
    if fail_fast:
        violations = violations[:1]
    center = format_id(ball.base)
    rendered = [
        [center] + [format_id(ball.vertices[i]) for i in witness] for witness in violations
    ]
    if rendered:
        logger.info(
            "%s condition at %s: %d violation(s), first %s",
            condition,
            center,
            len(rendered),
            rendered[0],
        )
    return ConditionReport(
        condition=condition,
        center=center,
        local_only=local_only,
        instances_checked=checked,
        violations=rendered,
    )


def _levels(ball: Ball, local_only: bool) -> List[int]:
    """Levels m of the pair (u, w) that are checked."""
    if local_only:
        return [2]
    return list(range(1, ball.radius))


@profile
def check_triangle(
    ball: Ball,
    oracle: Optional[NeighborOracle] = None,
    local_only: bool = False,
    *,
    fail_fast: bool = False,
    threads: Optional[int] = None,
    quiet: bool = True,
    format_id: Callable = str,
) -> ConditionReport:
    """Check the triangle condition at the ball's base.

    Args:
        ball: Ball of radius >= 3 around the centre v.
        oracle: Neighbor oracle used to draw completion candidates.
        local_only: Only check edges uw at distance 2 from v.
        fail_fast: Keep only the first violation.
        threads: Worker threads; defaults to the configured count.
        quiet: If True, suppress progress bars.
        format_id: Renders vertices in witnesses.

    Returns:
        ConditionReport with witnesses (v, u, w) for every edge uw at equal
        distance m from v whose endpoints share no neighbor at distance m - 1.
    """
    _require_radius(ball)
    lower = _lower_neighbors(ball, oracle)
    levels = set(_levels(ball, local_only))
    pairs = [
        (i, j)
        for i, row in enumerate(ball.adjacency)
        if ball.dist[i] in levels
        for j in row
        if i < j and ball.dist[j] == ball.dist[i]
    ]

    def work(chunk: Sequence[Tuple[int, int]]) -> ChunkResult:
        found: List[Witness] = []
        for i, j in chunk:
            if lower(i).isdisjoint(lower(j)):
                found.append((i, j))
                if fail_fast:
                    break
        return len(chunk), found

    checked, violations = _sweep(
        pairs, work, THREADS if threads is None else threads, quiet, "Triangle condition"
    )
    return _report(ball, "triangle", local_only, checked, violations, fail_fast, format_id)


@profile
def check_quadrangle(
    ball: Ball,
    oracle: Optional[NeighborOracle] = None,
    local_only: bool = False,
    *,
    fail_fast: bool = False,
    threads: Optional[int] = None,
    quiet: bool = True,
    format_id: Callable = str,
) -> ConditionReport:
    """Check the quadrangle condition at the ball's base.

    Every s at distance m + 1 with two distinct neighbors u, w at distance m
    needs some t adjacent to both at distance m - 1. The condition does not
    involve s, so each pair {u, w} is evaluated once and counted once, and a
    failing pair is reported with its smallest s as (v, u, w, s). u and w may
    be adjacent, exactly as the definition reads.
    """
    _require_radius(ball)
    lower = _lower_neighbors(ball, oracle)
    upper_levels = {m + 1 for m in _levels(ball, local_only)}

    first_top: Dict[Tuple[int, int], int] = {}
    for s, d in enumerate(ball.dist):
        if d not in upper_levels:
            continue
        below = sorted(j for j in ball.adjacency[s] if ball.dist[j] == d - 1)
        for pair in combinations(below, 2):
            first_top.setdefault(pair, s)
    triples = sorted((u, w, s) for (u, w), s in first_top.items())

    def work(chunk: Sequence[Witness]) -> ChunkResult:
        found: List[Witness] = []
        for u, w, s in chunk:
            if lower(u).isdisjoint(lower(w)):
                found.append((u, w, s))
                if fail_fast:
                    break
        return len(chunk), found

    checked, violations = _sweep(
        triples, work, THREADS if threads is None else threads, quiet, "Quadrangle condition"
    )
    return _report(ball, "quadrangle", local_only, checked, violations, fail_fast, format_id)


def check_all_centers(
    oracle: NeighborOracle,
    centers: Sequence,
    radius: int,
    local_only: bool = False,
    *,
    induced: bool = False,
    fail_fast: bool = False,
    max_vertices: Optional[int] = None,
    threads: Optional[int] = None,
    quiet: bool = True,
    format_id: Callable = str,
) -> List[ConditionReport]:
    """Run both checks with every given vertex as the centre.

    Cross-checks the vertex-transitivity assumption behind checking a single
    base vertex. Reports come in centre order, triangle before quadrangle.
    """
    from .ball import generate_ball

    reports: List[ConditionReport] = []
    for center in tqdm(sorted(centers), desc="Centres", disable=quiet):
        ball = generate_ball(
            oracle,
            center,
            radius,
            induced=induced,
            max_vertices=max_vertices,
            threads=threads,
        )
        for check in (check_triangle, check_quadrangle):
            reports.append(
                check(
                    ball,
                    oracle,
                    local_only,
                    fail_fast=fail_fast,
                    threads=threads,
                    format_id=format_id,
                )
            )
    return reports
