"""
Tests for shortest-path, tree and edit distances.
"""
import networkx as nx
import numpy as np
import pytest

from geo_kernel_lab.common.errors import DisconnectedGraphError, ValidationError
from geo_kernel_lab.common.SpaceSpec import SpaceKind
from geo_kernel_lab.common.WeightedGraph import WeightedGraph
from geo_kernel_lab.harness.pairwise import pairwise_distances
from geo_kernel_lab.harness.sampling import k23_graph, k23_strings, random_tree
from geo_kernel_lab.manifolds import (
    edit_distance, graph_shortest_paths, tree_distance, tree_distance_matrix)


def random_connected_graph(n, rng):
    edges = [(int(rng.integers(0, i)), i, float(rng.uniform(0.1, 3.0))) for i in range(1, n)]
    for _ in range(2 * n):
        u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
        if not any({u, v} == {a, b} for a, b, _ in edges):
            edges.append((u, v, float(rng.uniform(0.1, 3.0))))
    return WeightedGraph(n, edges)


class TestGraphShortestPaths:
    def test_path_graph(self):
        """Test distances along a weighted path 0 - 1 - 2 - 3."""
        graph = WeightedGraph(4, [(0, 1, 1.0), (1, 2, 2.0), (2, 3, 0.5)])
        d = graph_shortest_paths(graph).entries
        assert d[0, 3] == 3.5
        assert d[1, 3] == 2.5
        assert np.array_equal(d, d.T)

    def test_matches_floyd_warshall(self, rng):
        """Test Dijkstra against Floyd-Warshall on a random 30-vertex graph."""
        graph = random_connected_graph(30, rng)
        expected = nx.floyd_warshall_numpy(graph.to_networkx(), nodelist=range(30))
        assert np.allclose(graph_shortest_paths(graph).entries, expected, atol=1e-12)

    def test_shortcut_is_taken(self):
        """Test that a light two-hop path beats a heavy direct edge."""
        graph = WeightedGraph(3, [(0, 2, 5.0), (0, 1, 1.0), (1, 2, 1.0)])
        assert graph_shortest_paths(graph).entries[0, 2] == 2.0

    def test_disconnected_graph_names_vertices(self):
        """Test that a disconnected graph is rejected with one vertex per component."""
        graph = WeightedGraph(4, [(0, 1, 1.0), (2, 3, 1.0)])
        with pytest.raises(DisconnectedGraphError) as excinfo:
            graph_shortest_paths(graph, hint="increase epsilon")
        assert (excinfo.value.source, excinfo.value.target) == (0, 2)
        assert "increase epsilon" in str(excinfo.value)

    def test_single_vertex(self):
        """Test the trivial graph."""
        assert graph_shortest_paths(WeightedGraph(1, [])).n == 1

    def test_k23_path_metric(self, k23_distances):
        """Test that K_{2,3} with unit weights has the expected path metric."""
        d = graph_shortest_paths(k23_graph())
        assert np.array_equal(d.entries, k23_distances.entries)
        assert d.space.kind is SpaceKind.GRAPH


class TestTrees:
    def test_tree_distance(self):
        """Test the unique path in a small star."""
        star = WeightedGraph(4, [(0, 1, 1.0), (0, 2, 2.0), (0, 3, 3.0)])
        assert tree_distance(star, 1, 3) == 4.0
        assert tree_distance(star, 2, 2) == 0.0

    def test_unknown_vertex(self):
        """Test that vertices outside the tree raise."""
        star = WeightedGraph(3, [(0, 1, 1.0), (0, 2, 1.0)])
        with pytest.raises(ValidationError):
            tree_distance(star, 0, 5)

    @pytest.mark.parametrize("graph", [
        WeightedGraph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]),
        WeightedGraph(4, [(0, 1, 1.0), (2, 3, 1.0)]),
    ])
    def test_non_trees_rejected(self, graph):
        """Test that cycles and forests are not trees."""
        with pytest.raises(ValidationError, match="tree"):
            tree_distance_matrix(graph)

    def test_random_tree_matrix(self):
        """Test that the tree matrix agrees with pointwise tree distances."""
        points = random_tree(25, seed=3)
        d = tree_distance_matrix(points.graph)
        assert d.space.kind is SpaceKind.TREE
        assert d.entries[4, 17] == pytest.approx(tree_distance(points.graph, 4, 17))
        assert np.allclose(pairwise_distances(points).entries, d.entries)


class TestEditDistance:
    @pytest.mark.parametrize("s, t, expected", [
        ("kitten", "sitting", 3),
        ("", "abc", 3),
        ("abc", "", 3),
        ("flaw", "lawn", 2),
        ("same", "same", 0),
        ("ab", "ba", 2),
    ])
    def test_examples(self, s, t, expected):
        """Test classic Levenshtein examples."""
        assert edit_distance(s, t) == expected

    def test_symmetric(self):
        """Test that argument order does not matter."""
        assert edit_distance("abcd", "bd") == edit_distance("bd", "abcd") == 2

    def test_k23_strings(self, k23_distances):
        """Test that the planted strings realize the K_{2,3} path metric."""
        words = k23_strings()
        d = np.array([[edit_distance(s, t) for t in words] for s in words], dtype=float)
        assert np.array_equal(d, k23_distances.entries)
