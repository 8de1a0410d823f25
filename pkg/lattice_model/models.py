"""
Value types for the 1-skeleton of the affine type-A Coxeter complex.

Vertices are integer points of Z^{n+1} with coordinate sum zero whose
coordinates all share one residue mod n+1. Edges are steps that raise a
nonempty proper subset of coordinates by one rung (n+1 - k on the raised
coordinates, -k elsewhere, k the size of the subset).
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Sequence, Tuple

# Coordinates stay far below this inside any ball we can afford to build
COORDINATE_BOUND = 2**62


class LatticeModelError(ValueError):
    """Raised on malformed vertices, steps or mismatched ranks."""


def check_bounds(coords: Sequence[int]) -> None:
    """Reject coordinates that would leave the 64-bit range under one step."""
    for value in coords:
        if abs(value) >= COORDINATE_BOUND:
            raise LatticeModelError(
                f"Coordinate {value} exceeds the 64-bit working bound"
            )


@dataclass(frozen=True, order=True, slots=True)
class Vertex:
    """A vertex, stored in its sum-zero coordinate form."""

    coords: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.coords) - 1

    @classmethod
    def origin(cls, n: int) -> "Vertex":
        return cls((0,) * (n + 1))

    @classmethod
    def parse(cls, text: str) -> "Vertex":
        """Parse the comma-separated form, e.g. ``"2,-1,-1"``."""
        try:
            coords = tuple(int(part) for part in text.split(","))
        except ValueError as exc:
            raise LatticeModelError(f"Cannot parse vertex '{text}'") from exc
        if len(coords) < 3:
            raise LatticeModelError(f"Vertex '{text}' needs at least 3 coordinates")
        return cls(coords)

    def __str__(self) -> str:
        return ",".join(str(value) for value in self.coords)


@dataclass(frozen=True, slots=True)
class EdgeStep:
    """A nonempty proper subset of coordinates raised by one rung."""

    positive_set: FrozenSet[int]
    rank: int

    def __post_init__(self) -> None:
        size = len(self.positive_set)
        if size == 0 or size == self.rank + 1:
            raise LatticeModelError(
                "An edge step needs at least one raised and one lowered coordinate"
            )
        if any(i < 0 or i > self.rank for i in self.positive_set):
            raise LatticeModelError(
                f"Step {sorted(self.positive_set)} has coordinates outside 0..{self.rank}"
            )

    @classmethod
    def of(cls, positive: Iterable[int], n: int) -> "EdgeStep":
        return cls(frozenset(positive), n)

    @classmethod
    def from_bitmask(cls, mask: int, n: int) -> "EdgeStep":
        return cls(frozenset(i for i in range(n + 1) if mask >> i & 1), n)

    @classmethod
    def parse(cls, signs: str) -> "EdgeStep":
        """Parse a sign string such as ``"+--"``."""
        if len(signs) < 3 or any(ch not in "+-" for ch in signs):
            raise LatticeModelError(f"Invalid sign string '{signs}'")
        return cls(frozenset(i for i, ch in enumerate(signs) if ch == "+"), len(signs) - 1)

    @property
    def bitmask(self) -> int:
        return sum(1 << i for i in self.positive_set)

    @property
    def vector(self) -> Tuple[int, ...]:
        k = len(self.positive_set)
        high = self.rank + 1 - k
        return tuple(high if i in self.positive_set else -k for i in range(self.rank + 1))

    def complement(self) -> "EdgeStep":
        return EdgeStep(frozenset(range(self.rank + 1)) - self.positive_set, self.rank)

    def __str__(self) -> str:
        return "".join("+" if i in self.positive_set else "-" for i in range(self.rank + 1))
