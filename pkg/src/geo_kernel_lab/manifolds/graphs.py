"""
Graph Metrics Module

Shortest-path distances on weighted graphs and the path metric of
weighted trees.

Key Features:
- All-pairs Dijkstra through networkx
- Disconnected graphs are rejected with the two unreachable vertices
  named, so no infinite distance ever reaches a Gram matrix

Dependencies:
    - networkx: Dijkstra, connected components and tree recognition
    - numpy: distance matrix assembly
"""

import networkx as nx
import numpy as np

from geo_kernel_lab.common.DistanceMatrix import DistanceMatrix
from geo_kernel_lab.common.errors import DisconnectedGraphError, ValidationError
from geo_kernel_lab.common.SpaceSpec import SpaceKind, SpaceSpec
from geo_kernel_lab.common.WeightedGraph import WeightedGraph
from geo_kernel_lab.config.logging_config import LoggingConfig

logger = LoggingConfig.get_logger(__name__)


def require_connected(graph: nx.Graph, hint: str = "") -> None:
    """Raise ``DisconnectedGraphError`` naming one vertex from each of two components."""
    if graph.number_of_nodes() <= 1 or nx.is_connected(graph):
        return
    components = sorted((min(c) for c in nx.connected_components(graph)))
    raise DisconnectedGraphError(components[0], components[1], hint)


def graph_shortest_paths(g: WeightedGraph, kind: SpaceKind = SpaceKind.GRAPH,
                         hint: str = "") -> DistanceMatrix:
    """
    All-pairs shortest-path distances of a connected weighted graph.

    Args:
        g (WeightedGraph): The graph
        kind (SpaceKind): Provenance tag of the result (graph or tree)
        hint (str): Appended to the disconnection error message

    Returns:
        DistanceMatrix: n x n matrix of path lengths

    Raises:
        DisconnectedGraphError: some pair of vertices has no path
    """
    graph = g.to_networkx()
    require_connected(graph, hint)

    n = g.vertex_count
    entries = np.zeros((n, n))
    for source, lengths in nx.all_pairs_dijkstra_path_length(graph, weight="weight"):
        for target, length in lengths.items():
            if target > source:
                entries[source, target] = length
    # path sums from either end may differ in the last bit
    entries = entries + entries.T
    logger.debug("Shortest paths computed on %d vertices, %d edges", n, g.edge_count)
    return DistanceMatrix(entries, SpaceSpec(kind=kind))


def validate_tree(g: WeightedGraph) -> nx.Graph:
    """Return the networkx form of ``g``, raising unless it is a tree."""
    graph = g.to_networkx()
    if not nx.is_tree(graph):
        raise ValidationError(
            f"expected a tree (connected, {g.vertex_count - 1} edges), got "
            f"{g.edge_count} edges in "
            f"{nx.number_connected_components(graph)} component(s)")
    return graph


def tree_distance(tree: WeightedGraph, a: int, b: int) -> float:
    """Weight of the unique path between vertices ``a`` and ``b`` of a tree."""
    graph = validate_tree(tree)
    for vertex in (a, b):
        if vertex not in graph:
            raise ValidationError(
                f"vertex {vertex} outside 0..{tree.vertex_count - 1}")
    if a == b:
        return 0.0
    return float(nx.shortest_path_length(graph, a, b, weight="weight"))


def tree_distance_matrix(tree: WeightedGraph) -> DistanceMatrix:
    validate_tree(tree)
    return graph_shortest_paths(tree, SpaceKind.TREE)
