"""
Weighted Graph Module

Undirected graphs with positive edge weights on vertices ``0 .. n-1``.
Shortest-path and tree metrics in ``manifolds.graphs`` are computed on
these graphs through networkx.

Dependencies:
    - networkx: graph container handed to the shortest-path routines
"""

from typing import Dict, Iterable, List, Tuple

import networkx as nx

from geo_kernel_lab.common.errors import ValidationError

Edge = Tuple[int, int, float]


class WeightedGraph:
    """
    Undirected graph with positive real edge weights.

    Attributes:
        vertex_count (int): Number of vertices, labelled 0 .. vertex_count-1
        edges (list): Canonical edge list of (u, v, weight) with u < v
    """

    def __init__(self, vertex_count: int, edges: Iterable[Edge]) -> None:
        """
        Build and validate a graph.

        Args:
            vertex_count (int): Number of vertices (at least 1)
            edges (iterable): (u, v, weight) triples; each undirected edge
                may be listed once or in both directions with equal weight

        Raises:
            ValidationError: self-loops, non-positive weights, unknown
                vertices or one edge listed with two different weights
        """
        if int(vertex_count) < 1:
            raise ValidationError(
                f"a graph needs at least one vertex, got {vertex_count}")
        self.vertex_count: int = int(vertex_count)

        weights: Dict[Tuple[int, int], float] = {}
        for u, v, w in edges:
            u, v, w = int(u), int(v), float(w)
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            for vertex in (u, v):
                if not 0 <= vertex < self.vertex_count:
                    raise ValidationError(
                        f"edge endpoint {vertex} outside "
                        f"0..{self.vertex_count - 1}")
            if not w > 0.0:
                raise ValidationError(
                    f"edge ({u}, {v}) has non-positive weight {w}")
            key = (min(u, v), max(u, v))
            if key in weights and weights[key] != w:
                raise ValidationError(
                    f"edge {key} listed with weights {weights[key]} and {w}")
            weights[key] = w

        self.edges: List[Edge] = [
            (u, v, w) for (u, v), w in sorted(weights.items())
        ]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def to_networkx(self) -> nx.Graph:
        """Return the graph as a networkx ``Graph`` with ``weight`` attributes."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_weighted_edges_from(self.edges)
        return graph

    def __repr__(self) -> str:
        return (f"WeightedGraph(vertex_count={self.vertex_count}, "
                f"edge_count={self.edge_count})")
