"""
Canonical forms, elementary divisors and types of lattice classes.
"""

import logging
from typing import List, Optional, Sequence

import numpy as np
from sympy import Matrix, isprime
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, invariant_factors

from config.config import BUILDING_DIMENSION, MAX_PRIME
from .models import ENTRY_BOUND, DivisorProfile, LatticeClass, LatticeClassError

logger = logging.getLogger(__name__)


def valuation(x: int, p: int) -> int:
    """Exponent of p in the nonzero integer x."""
    x = abs(int(x))
    if x == 0:
        raise LatticeClassError("The p-valuation of 0 is undefined")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def check_prime(p: int) -> None:
    if not isprime(p):
        raise LatticeClassError(f"{p} is not prime")
    if p > MAX_PRIME:
        raise LatticeClassError(f"Primes above {MAX_PRIME} are not supported, got {p}")


def _to_domain(rows: Sequence[Sequence[int]]) -> DomainMatrix:
    d = len(rows)
    return DomainMatrix([[ZZ(int(x)) for x in row] for row in rows], (d, d), ZZ)


def _p_power_exponent(det: int, p: int) -> int:
    if det == 0:
        raise LatticeClassError("Singular matrix has no lattice class")
    v = valuation(det, p)
    if abs(det) != p**v:
        raise LatticeClassError(f"Determinant {det} is not a power of {p}")
    return v


def base_class(p: int, dim: int = BUILDING_DIMENSION) -> LatticeClass:
    """The class of the standard lattice Z_p^dim."""
    check_prime(p)
    return LatticeClass.from_matrix(np.eye(dim, dtype=np.int64), p)


def canonicalize(m, p: int, det: Optional[int] = None) -> LatticeClass:
    """Canonical representative of the class spanned by the columns of m.

    Args:
        m: Square integer matrix, as nested sequences or a numpy array.
        p: The prime.
        det: Determinant of m up to sign, if already known.

    Returns:
        LatticeClass in column Hermite normal form, divided by p for as long as
        every entry stays divisible.
    """
    rows = [[int(x) for x in row] for row in np.asarray(m).tolist()]
    if any(len(row) != len(rows) for row in rows):
        raise LatticeClassError("Lattice bases must be square")
    dm = _to_domain(rows)
    if det is None:
        det = int(dm.det())
    _p_power_exponent(det, p)

    hnf = hermite_normal_form(dm, D=ZZ(abs(det))).to_Matrix()
    out = [[int(x) for x in hnf.row(i)] for i in range(hnf.rows)]
    while all(x % p == 0 for row in out for x in row):
        out = [[x // p for x in row] for row in out]
    if any(abs(x) >= ENTRY_BOUND for row in out for x in row):
        raise LatticeClassError("Canonical form exceeds the 64-bit working bound")
    return LatticeClass.from_matrix(out, p)


def determinant_valuation(lattice: LatticeClass) -> int:
    v = 0
    for x in lattice.diagonal:
        v += valuation(x, lattice.prime)
    return v


def type_of(lattice: LatticeClass) -> int:
    """p-valuation of the determinant, modulo the dimension."""
    return determinant_valuation(lattice) % lattice.dim


def _profile_of(rows: Sequence[Sequence[int]], p: int) -> DivisorProfile:
    factors = invariant_factors(_to_domain(rows))
    vals: List[int] = sorted((valuation(int(f), p) for f in factors), reverse=True)
    low = vals[-1]
    return DivisorProfile(tuple(v - low for v in vals))


def divisor_profile(lattice: LatticeClass) -> DivisorProfile:
    """Elementary divisor valuations of the representative inside the standard lattice."""
    return _profile_of(lattice.matrix().tolist(), lattice.prime)


def distance_to_base(lattice: LatticeClass) -> int:
    return divisor_profile(lattice).spread


def class_distance(a: LatticeClass, b: LatticeClass) -> int:
    """Distance between two classes of the same building.

    The relative position of b with respect to a is read off the elementary
    divisors of adj(H_a) H_b, a scalar multiple of H_a^{-1} H_b.
    """
    if (a.prime, a.dim) != (b.prime, b.dim):
        raise LatticeClassError("Classes belong to different buildings")
    relative = Matrix(a.matrix().tolist()).adjugate() * Matrix(b.matrix().tolist())
    rows = [[int(x) for x in relative.row(i)] for i in range(relative.rows)]
    return _profile_of(rows, a.prime).spread
