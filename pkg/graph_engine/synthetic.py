"""
Finite control graphs exposed as neighbor oracles.
"""

from typing import Dict, Hashable, Tuple

import networkx as nx

from .models import NeighborOracle


def graph_oracle(graph: nx.Graph) -> NeighborOracle:
    """Freeze a networkx graph into a deterministic neighbor function."""
    table: Dict[Hashable, Tuple] = {
        node: tuple(sorted(graph.neighbors(node))) for node in graph.nodes
    }
    return table.__getitem__


def cycle_oracle(k: int) -> NeighborOracle:
    """The k-cycle on nodes 0..k-1; fails the triangle (k=5) or quadrangle (k=6) condition."""
    return graph_oracle(nx.cycle_graph(k))


def hypercube_oracle(d: int) -> NeighborOracle:
    """The d-cube skeleton on 0/1 tuples; a median graph, so weakly modular."""
    return graph_oracle(nx.hypercube_graph(d))


SYNTHETIC_GRAPHS = {
    "c5": (lambda: cycle_oracle(5), 0),
    "c6": (lambda: cycle_oracle(6), 0),
    "cube": (lambda: hypercube_oracle(3), (0, 0, 0)),
}
