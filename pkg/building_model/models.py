"""
Value types for the building of homothety classes of Z_p-lattices.

A class is stored through its primitive integer representative in upper
triangular column Hermite normal form: diagonal entries are powers of p and
every entry right of a diagonal entry is reduced modulo it.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

# Matrix entries must stay below this before any product is formed
ENTRY_BOUND = 2**62


class LatticeClassError(ValueError):
    """Raised on composite primes, singular matrices or non-p-power determinants."""


def _triangle_size(dim: int) -> int:
    return dim * (dim + 1) // 2


@dataclass(frozen=True, order=True, slots=True)
class LatticeClass:
    """A vertex of the building, identified by its canonical representative.

    ``entries`` holds the upper triangle row by row, so the class of the
    standard lattice in dimension 4 is ``(1, 0, 0, 0, 1, 0, 0, 1, 0, 1)``.
    """

    entries: Tuple[int, ...]
    prime: int
    dim: int = 4

    def __post_init__(self) -> None:
        if len(self.entries) != _triangle_size(self.dim):
            raise LatticeClassError(
                f"Expected {_triangle_size(self.dim)} entries for dimension {self.dim}, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_matrix(cls, matrix, prime: int) -> "LatticeClass":
        """Wrap an already canonical upper triangular matrix."""
        rows = [list(map(int, row)) for row in matrix]
        dim = len(rows)
        entries = tuple(rows[i][j] for i in range(dim) for j in range(i, dim))
        return cls(entries, prime, dim)

    @classmethod
    def parse(cls, text: str) -> "LatticeClass":
        """Parse ``"2|1,0,0,0;1,0,0;1,0;1"``."""
        try:
            prime_text, body = text.split("|", 1)
            rows = [[int(x) for x in row.split(",")] for row in body.split(";")]
            prime = int(prime_text)
        except ValueError as exc:
            raise LatticeClassError(f"Cannot parse lattice class '{text}'") from exc
        dim = len(rows)
        if [len(row) for row in rows] != list(range(dim, 0, -1)):
            raise LatticeClassError(f"'{text}' is not an upper triangle")
        return cls(tuple(x for row in rows for x in row), prime, dim)

    def row(self, i: int) -> Tuple[int, ...]:
        """Entries of row i from the diagonal rightwards."""
        start = sum(self.dim - r for r in range(i))
        return self.entries[start : start + self.dim - i]

    def matrix(self) -> np.ndarray:
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for i in range(self.dim):
            out[i, i:] = self.row(i)
        return out

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.row(i)[0] for i in range(self.dim))

    def __str__(self) -> str:
        body = ";".join(
            ",".join(str(x) for x in self.row(i)) for i in range(self.dim)
        )
        return f"{self.prime}|{body}"


@dataclass(frozen=True, order=True, slots=True)
class DivisorProfile:
    """Sorted p-valuations of the elementary divisors, shifted so the last is 0."""

    a: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.a or self.a[-1] != 0:
            raise LatticeClassError(f"Profile {self.a} must end in 0")
        if any(x < y for x, y in zip(self.a, self.a[1:])):
            raise LatticeClassError(f"Profile {self.a} must be non-increasing")

    @property
    def spread(self) -> int:
        return self.a[0]

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.a)
