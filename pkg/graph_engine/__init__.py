"""
Model-agnostic graph machinery: balls, exact distances, weak-modularity checks.
"""

from .ball import BallLimitExceeded, bfs_distance, generate_ball
from .conditions import (
    RadiusTooSmallError,
    check_all_centers,
    check_quadrangle,
    check_triangle,
)
from .cycles import induced_4cycles_through
from .export import ball_to_model, render_ball, report_to_json
from .models import Ball, BallExport, ConditionReport, NeighborOracle
from .synthetic import SYNTHETIC_GRAPHS, cycle_oracle, graph_oracle, hypercube_oracle

__all__ = [
    "Ball",
    "BallExport",
    "BallLimitExceeded",
    "ConditionReport",
    "NeighborOracle",
    "RadiusTooSmallError",
    "SYNTHETIC_GRAPHS",
    "ball_to_model",
    "bfs_distance",
    "check_all_centers",
    "check_quadrangle",
    "check_triangle",
    "cycle_oracle",
    "generate_ball",
    "graph_oracle",
    "hypercube_oracle",
    "induced_4cycles_through",
    "render_ball",
    "report_to_json",
]
