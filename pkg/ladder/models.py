"""
Ladder value type: a rung per coordinate, normalized so the lowest rung is 0.
"""

from dataclasses import dataclass
from typing import FrozenSet, Sequence, Tuple

from lattice_model import LatticeModelError


@dataclass(frozen=True, order=True, slots=True)
class Ladder:
    """Rung assignment {0..n} -> Z taken up to translation."""

    rungs: Tuple[int, ...]

    @classmethod
    def normalized(cls, rungs: Sequence[int]) -> "Ladder":
        low = min(rungs)
        return cls(tuple(r - low for r in rungs))

    @classmethod
    def parse(cls, text: str) -> "Ladder":
        """Parse ``"4,4,1,1,0"``; the result is renormalized."""
        try:
            rungs = [int(part) for part in text.split(",")]
        except ValueError as exc:
            raise LatticeModelError(f"Cannot parse ladder '{text}'") from exc
        if len(rungs) < 3:
            raise LatticeModelError(f"Ladder '{text}' needs at least 3 rungs")
        return cls.normalized(rungs)

    @property
    def rank(self) -> int:
        return len(self.rungs) - 1

    @property
    def bottom(self) -> FrozenSet[int]:
        return frozenset(i for i, r in enumerate(self.rungs) if r == 0)

    @property
    def top(self) -> FrozenSet[int]:
        high = max(self.rungs)
        return frozenset(i for i, r in enumerate(self.rungs) if r == high)

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.rungs)
