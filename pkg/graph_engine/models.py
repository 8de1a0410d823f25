"""
Data models for the graph engine.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Generic, Hashable, List, Literal, Sequence, Tuple, TypeVar

from pydantic import BaseModel, ConfigDict, computed_field

V = TypeVar("V", bound=Hashable)
NeighborOracle = Callable[[V], Sequence[V]]
ConditionName = Literal["triangle", "quadrangle", "square"]


@dataclass(frozen=True)
class Ball(Generic[V]):
    """A finite piece of a graph around a base vertex with exact BFS distances.

    Vertices are indexed in BFS order, each layer sorted canonically. Every
    vertex with dist < radius has its full oracle neighborhood recorded. When
    ``induced`` is false, vertices at dist == radius were never queried, so
    edges between two of them are absent.
    """

    base: V
    radius: int
    vertices: Tuple[V, ...]
    adjacency: Tuple[Tuple[int, ...], ...]
    dist: Tuple[int, ...]
    induced: bool = True
    index: Dict[V, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not self.index:
            object.__setattr__(
                self, "index", {v: i for i, v in enumerate(self.vertices)}
            )

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.index

    def distance_of(self, v: V) -> int:
        return self.dist[self.index[v]]

    def neighbors_in_ball(self, v: V) -> List[V]:
        return [self.vertices[j] for j in self.adjacency[self.index[v]]]

    def layer(self, d: int) -> List[V]:
        return [v for v, dv in zip(self.vertices, self.dist) if dv == d]

    def edges(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.adjacency) for j in row if i < j]


class BallExport(BaseModel):
    """JSON form of a Ball."""

    model_config = ConfigDict(extra="forbid")
    base: str
    radius: int
    vertices: List[str]
    edges: List[List[int]]
    dist: List[int]


class ConditionReport(BaseModel):
    """Outcome of one condition sweep over a ball."""

    model_config = ConfigDict(extra="forbid")
    condition: ConditionName
    center: str
    local_only: bool
    instances_checked: int
    violations: List[List[str]]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return not self.violations
