"""Rendering of balls and condition reports for output files."""

from typing import Callable, Dict, List

from config.config import EXPORT_INDENT
from .models import Ball, BallExport, ConditionReport


def ball_to_model(ball: Ball, format_id: Callable = str) -> BallExport:
    return BallExport(
        base=format_id(ball.base),
        radius=ball.radius,
        vertices=[format_id(v) for v in ball.vertices],
        edges=[[i, j] for i, j in ball.edges()],
        dist=list(ball.dist),
    )


def _render_json(ball: Ball, format_id: Callable) -> str:
    return ball_to_model(ball, format_id).model_dump_json(indent=EXPORT_INDENT) + "\n"


def _render_dot(ball: Ball, format_id: Callable) -> str:
    """DOT graph with each vertex labelled by its distance from the base."""
    lines = ["graph ball {", "  node [shape=circle];"]
    for i, (v, d) in enumerate(zip(ball.vertices, ball.dist)):
        lines.append(f'  {i} [label="{d}", tooltip="{format_id(v)}"];')
    for i, j in ball.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _render_text(ball: Ball, format_id: Callable) -> str:
    lines = [
        f"base: {format_id(ball.base)}",
        f"radius: {ball.radius}",
        f"vertices: {len(ball)}",
        f"edges: {len(ball.edges())}",
    ]
    for d in range(ball.radius + 1):
        layer: List = ball.layer(d)
        lines.append(f"layer {d}: {len(layer)}")
    return "\n".join(lines) + "\n"


BALL_RENDERERS: Dict[str, Callable[[Ball, Callable], str]] = {
    "json": _render_json,
    "dot": _render_dot,
    "text": _render_text,
}


def render_ball(ball: Ball, fmt: str, format_id: Callable = str) -> str:
    """Format a ball as json, dot or text."""
    renderer = BALL_RENDERERS.get(fmt)
    if renderer is None:
        raise ValueError(f"Unknown ball format '{fmt}'")
    return renderer(ball, format_id)


def report_to_json(report: ConditionReport) -> str:
    return report.model_dump_json(indent=EXPORT_INDENT) + "\n"
