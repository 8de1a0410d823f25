"""
Ladder bookkeeping and the constructive completions built on it.
"""

from .completion import (
    CompletionError,
    quadrangle_complete,
    square_center,
    triangle_complete,
)
from .ladder import apply_step, ladder_height, ladder_of, vertex_of
from .models import Ladder

__all__ = [
    "CompletionError",
    "Ladder",
    "apply_step",
    "ladder_height",
    "ladder_of",
    "quadrangle_complete",
    "square_center",
    "triangle_complete",
    "vertex_of",
]
