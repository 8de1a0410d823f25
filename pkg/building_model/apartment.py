"""
The standard apartment: diagonal classes, identified with the lattice model.
"""

from math import prod

import numpy as np

from ladder import ladder_of
from lattice_model import Vertex

from .lattice_class import canonicalize, check_prime
from .models import LatticeClass


def embed_apartment(v: Vertex, p: int) -> LatticeClass:
    """Send a vertex with ladder r to the class of diag(p^r_0, ..., p^r_n).

    Raising a set of rungs by one multiplies the matching diagonal entries by
    p, which is a step to a neighbor, so adjacency carries over.
    """
    check_prime(p)
    diag = [p**r for r in ladder_of(v).rungs]
    return canonicalize(np.diag(np.array(diag, dtype=np.int64)), p, det=prod(diag))
