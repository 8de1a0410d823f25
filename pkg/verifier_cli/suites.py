"""
Verification suites: each named check runs against a prepared ball and
returns a SuiteResult.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, Hashable, List, Optional, Tuple

from tqdm import tqdm

import building_model
import lattice_model
from graph_engine import (
    SYNTHETIC_GRAPHS,
    Ball,
    ConditionReport,
    NeighborOracle,
    check_all_centers,
    check_quadrangle,
    check_triangle,
    generate_ball,
)
from ladder import CompletionError, quadrangle_complete, triangle_complete

from .models import CheckName, RunConfig, SuiteResult

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModelSetup:
    """How to walk one model: its oracle, base vertex and type function."""

    oracle: NeighborOracle
    base: Hashable
    type_of: Optional[Callable[[Hashable], int]] = None
    n_types: int = 0


@dataclass(frozen=True)
class SuiteContext:
    config: RunConfig
    setup: ModelSetup
    ball: Ball
    # Centre sweeps, keyed by local_only, shared between suites of one run
    center_sweeps: Dict[bool, List[ConditionReport]] = field(default_factory=dict)


def model_setup(config: RunConfig) -> ModelSetup:
    if config.model == "lattice":
        return ModelSetup(
            oracle=lattice_model.neighbors,
            base=lattice_model.Vertex.origin(config.n),
            type_of=lattice_model.type_of,
            n_types=config.n + 1,
        )
    if config.model == "building":
        return ModelSetup(
            oracle=building_model.neighbors,
            base=building_model.base_class(config.p, config.building_dim),
            type_of=building_model.type_of,
            n_types=config.building_dim,
        )
    factory, base = SYNTHETIC_GRAPHS[config.graph]
    return ModelSetup(oracle=factory(), base=base)


def _center_sweep(ctx: SuiteContext, local_only: bool) -> List[ConditionReport]:
    """Both checks around every vertex of the radius-1 ball, computed once per run."""
    cached = ctx.center_sweeps.get(local_only)
    if cached is None:
        centers = [v for v, d in zip(ctx.ball.vertices, ctx.ball.dist) if d <= 1]
        cached = check_all_centers(
            ctx.setup.oracle,
            centers,
            ctx.config.radius,
            local_only,
            fail_fast=ctx.config.fail_fast,
            max_vertices=ctx.config.max_vertices,
            quiet=ctx.config.quiet,
        )
        ctx.center_sweeps[local_only] = cached
    return cached


def _condition_suite(
    ctx: SuiteContext, name: CheckName, checks: List[Callable], local_only: bool
) -> SuiteResult:
    reports = [
        check(
            ctx.ball,
            ctx.setup.oracle,
            local_only,
            fail_fast=ctx.config.fail_fast,
            quiet=ctx.config.quiet,
        )
        for check in checks
    ]
    if ctx.config.all_centers:
        wanted = {r.condition for r in reports}
        reports.extend(
            r for r in _center_sweep(ctx, local_only) if r.condition in wanted
        )
    return SuiteResult(
        name=name,
        instances_checked=sum(r.instances_checked for r in reports),
        reports=reports,
    )


def run_triangle(ctx: SuiteContext) -> SuiteResult:
    return _condition_suite(ctx, "triangle", [check_triangle], local_only=False)


def run_quadrangle(ctx: SuiteContext) -> SuiteResult:
    return _condition_suite(ctx, "quadrangle", [check_quadrangle], local_only=False)


def run_local_wm(ctx: SuiteContext) -> SuiteResult:
    return _condition_suite(
        ctx, "local-wm", [check_triangle, check_quadrangle], local_only=True
    )


def run_height_formula(ctx: SuiteContext) -> SuiteResult:
    """BFS distance from the base against the closed-form distance."""
    if ctx.config.model == "lattice":
        formula = lattice_model.height
    else:
        formula = building_model.distance_to_base
    mismatches = []
    for v, d in tqdm(
        zip(ctx.ball.vertices, ctx.ball.dist),
        total=len(ctx.ball),
        desc="Height formula",
        disable=ctx.config.quiet,
    ):
        expected = formula(v)
        if expected != d:
            mismatches.append([str(v), str(d), str(expected)])
    return SuiteResult(
        name="height-formula", instances_checked=len(ctx.ball), mismatches=mismatches
    )


def _lattice_edge_forms(ctx: SuiteContext) -> SuiteResult:
    n = ctx.config.n
    degree = lattice_model.degree(n)
    mismatches = []
    checked = 0
    for v, d in zip(ctx.ball.vertices, ctx.ball.dist):
        if d >= ctx.ball.radius:
            continue
        checked += 1
        found = lattice_model.neighbors(v)
        if len(found) != degree:
            mismatches.append([str(v), f"degree {len(found)}, expected {degree}"])
        for w in found:
            if not lattice_model.is_vertex(w.coords, n):
                mismatches.append([str(v), str(w), "not a vertex"])
            elif not lattice_model.is_adjacent(w, v):
                mismatches.append([str(v), str(w), "asymmetric"])

    base = ctx.setup.base
    families = {
        lattice_model.family_of([b - a for a, b in zip(base.coords, w.coords)])
        for w in lattice_model.neighbors(base)
    }
    expected = set(lattice_model.edge_families(n))
    if families != expected:
        mismatches.append(
            [str(base), f"families {sorted(families)}, expected {sorted(expected)}"]
        )
    return SuiteResult(name="edge-forms", instances_checked=checked, mismatches=mismatches)


def _building_edge_forms(ctx: SuiteContext) -> SuiteResult:
    expected = building_model.neighbor_count(ctx.config.building_dim, ctx.config.p)
    mismatches = []
    checked = 0
    for v, d in zip(ctx.ball.vertices, ctx.ball.dist):
        if d >= ctx.ball.radius:
            continue
        checked += 1
        found = building_model.neighbors(v)
        if len(set(found)) != expected:
            mismatches.append([str(v), f"degree {len(set(found))}, expected {expected}"])
        if v in found:
            mismatches.append([str(v), "adjacent to itself"])
        for w in found:
            if building_model.type_of(v) == building_model.type_of(w):
                mismatches.append([str(v), str(w), "equal types"])
            # Only interior classes have their neighbors enumerated already.
            j = ctx.ball.index.get(w)
            if j is not None and ctx.ball.dist[j] < ctx.ball.radius:
                if v not in building_model.neighbors(w):
                    mismatches.append([str(v), str(w), "asymmetric"])
    return SuiteResult(name="edge-forms", instances_checked=checked, mismatches=mismatches)


def run_edge_forms(ctx: SuiteContext) -> SuiteResult:
    """Degree, symmetry and edge shape around every vertex strictly inside the ball."""
    if ctx.config.model == "lattice":
        return _lattice_edge_forms(ctx)
    return _building_edge_forms(ctx)


def run_square_lemma(ctx: SuiteContext) -> SuiteResult:
    report = building_model.verify_square_lemma(
        ctx.ball,
        ctx.setup.type_of,
        n_types=ctx.setup.n_types,
        fail_fast=ctx.config.fail_fast,
    )
    return SuiteResult(
        name="square-lemma", instances_checked=report.instances_checked, reports=[report]
    )


def run_apartment_embed(ctx: SuiteContext) -> SuiteResult:
    """The rank-3 lattice ball maps into the building preserving adjacency and distance."""
    p = ctx.config.p
    if ctx.config.model == "lattice":
        ball = ctx.ball
    else:
        ball = generate_ball(
            lattice_model.neighbors,
            lattice_model.Vertex.origin(3),
            ctx.config.radius,
            quiet=ctx.config.quiet,
        )
    image = {v: building_model.embed_apartment(v, p) for v in ball.vertices}
    mismatches = []
    if len(set(image.values())) != len(image):
        mismatches.append(["embedding is not injective"])

    checked = 0
    for u, v in tqdm(
        combinations(ball.vertices, 2),
        total=len(ball) * (len(ball) - 1) // 2,
        desc="Apartment pairs",
        disable=ctx.config.quiet,
    ):
        checked += 1
        lattice_adjacent = lattice_model.is_adjacent(u, v)
        if lattice_adjacent != building_model.is_adjacent(image[u], image[v]):
            mismatches.append([str(u), str(v), "adjacency differs"])
        gap = lattice_model.height(lattice_model.translate(v, lattice_model.negate(u)))
        if gap != building_model.class_distance(image[u], image[v]):
            mismatches.append([str(u), str(v), "distance differs"])
    for v in ball.vertices:
        checked += 1
        if lattice_model.height(v) != building_model.distance_to_base(image[v]):
            mismatches.append([str(v), "height differs from distance to base"])
    return SuiteResult(
        name="apartment-embed", instances_checked=checked, mismatches=mismatches
    )


def run_completions(ctx: SuiteContext) -> SuiteResult:
    """Constructive completions against the brute-force witness sets of the ball."""
    ball = ctx.ball
    lower = {
        i: {j for j in row if ball.dist[j] == ball.dist[i] - 1}
        for i, row in enumerate(ball.adjacency)
    }
    mismatches = []
    checked = 0

    for i, j in ball.edges():
        h = ball.dist[i]
        if h != ball.dist[j] or not 1 <= h < ball.radius:
            continue
        checked += 1
        a, b = ball.vertices[i], ball.vertices[j]
        witnesses = lower[i] & lower[j]
        try:
            c = triangle_complete(a, b)
        except CompletionError as exc:
            mismatches.append([str(a), str(b), str(exc)])
            continue
        if ball.index.get(c) not in witnesses:
            mismatches.append([str(a), str(b), f"{c} is not a common lower neighbor"])

    for x in range(len(ball)):
        if ball.dist[x] < 2:
            continue
        for y, z in combinations(sorted(lower[x]), 2):
            checked += 1
            vx, vy, vz = ball.vertices[x], ball.vertices[y], ball.vertices[z]
            try:
                w = quadrangle_complete(vx, vy, vz)
            except CompletionError as exc:
                mismatches.append([str(vx), str(vy), str(vz), str(exc)])
                continue
            if ball.index.get(w) not in lower[y] & lower[z]:
                mismatches.append(
                    [str(vx), str(vy), str(vz), f"{w} is not a common lower neighbor"]
                )
    return SuiteResult(name="completions", instances_checked=checked, mismatches=mismatches)


SUITES: Dict[str, Callable[[SuiteContext], SuiteResult]] = {
    "triangle": run_triangle,
    "quadrangle": run_quadrangle,
    "local-wm": run_local_wm,
    "height-formula": run_height_formula,
    "edge-forms": run_edge_forms,
    "square-lemma": run_square_lemma,
    "apartment-embed": run_apartment_embed,
    "completions": run_completions,
}


def run_suites(config: RunConfig) -> Tuple[Ball, List[SuiteResult]]:
    """Build the ball once and run every requested suite in the given order.

    Returns:
        (ball, results) with results in the order of ``config.checks``.
    """
    setup = model_setup(config)
    ball = generate_ball(
        setup.oracle,
        setup.base,
        config.radius,
        induced=False,
        max_vertices=config.max_vertices,
        quiet=config.quiet,
    )
    logger.info("ball of radius %d: %d vertices", config.radius, len(ball))
    ctx = SuiteContext(config=config, setup=setup, ball=ball)
    results = []
    for name in config.checks:
        logger.info("running %s", name)
        results.append(SUITES[name](ctx))
    return ball, results
