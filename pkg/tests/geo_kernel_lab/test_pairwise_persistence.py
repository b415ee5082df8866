"""
Tests for pairwise distance matrices and result-file persistence.
"""
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from geo_kernel_lab.common.DistanceMatrix import DistanceMatrix
from geo_kernel_lab.common.errors import ValidationError
from geo_kernel_lab.common.PointSet import PointSet
from geo_kernel_lab.common.SpaceSpec import SpaceKind, SpaceSpec
from geo_kernel_lab.common.WeightedGraph import WeightedGraph
from geo_kernel_lab.harness import persistence
from geo_kernel_lab.harness.pairwise import pairwise_distances
from geo_kernel_lab.harness.persistence import (
    CSV_HEADER, load_distance_matrix, read_plot_data, read_result_document,
    save_distance_matrix, write_plot_data, write_result_document)
from geo_kernel_lab.harness.sampling import sample_points
from geo_kernel_lab.manifolds import point_distance

SPACES = [
    SpaceSpec(SpaceKind.EUCLIDEAN, dim=3),
    SpaceSpec(SpaceKind.LQ, dim=3, q_norm=4.0),
    SpaceSpec(SpaceKind.SPHERE, dim=4),
    SpaceSpec(SpaceKind.PROJECTIVE, dim=4),
    SpaceSpec(SpaceKind.HYPERBOLIC, dim=3),
    SpaceSpec(SpaceKind.SPD, dim=3, metric_variant="affine_invariant"),
    SpaceSpec(SpaceKind.GRASSMANN, dim=5, metric_variant="intrinsic", subspace_dim=2),
    SpaceSpec(SpaceKind.NORMAL),
]


class TestPairwiseDistances:
    def test_single_point(self):
        """Test the 1 x 1 zero matrix."""
        points = PointSet(SpaceSpec(SpaceKind.EUCLIDEAN, dim=2), [[1.0, 2.0]])
        assert np.array_equal(pairwise_distances(points).entries, [[0.0]])

    def test_orthogonal_unit_vectors(self):
        """Test the sphere distance between e1 and e2."""
        points = PointSet(SpaceSpec(SpaceKind.SPHERE, dim=2), [[1.0, 0.0], [0.0, 1.0]])
        assert pairwise_distances(points).entries[0, 1] == pytest.approx(np.pi / 2)

    @pytest.mark.parametrize("space", SPACES, ids=lambda s: s.describe())
    def test_matches_pointwise_distances(self, space):
        """Test vectorized rows against the pointwise distance."""
        points = sample_points(space, 8, seed=6)
        d = pairwise_distances(points)
        assert d.space == space
        for i, j in ((0, 1), (2, 7), (5, 3)):
            assert d.entries[i, j] == pytest.approx(
                point_distance(space, points[i], points[j]), rel=1e-9, abs=1e-12)

    def test_variant_override(self):
        """Test that a metric variant replaces the sampled one."""
        points = sample_points(SpaceSpec(SpaceKind.SPD, dim=3, metric_variant="affine_invariant"),
                               6, seed=1)
        ai = pairwise_distances(points)
        fisher = pairwise_distances(points, variant="fisher")
        assert fisher.space.metric_variant == "fisher"
        assert np.allclose(fisher.entries, ai.entries / np.sqrt(2.0))

    def test_workers_do_not_change_results(self):
        """Test that threaded rows match sequential rows exactly."""
        points = sample_points(SpaceSpec(SpaceKind.SPD, dim=3, metric_variant="log_euclidean"),
                               15, seed=2)
        assert np.array_equal(pairwise_distances(points, workers=4).entries,
                              pairwise_distances(points).entries)

    def test_graph_submatrix(self):
        """Test that graph samples index the all-pairs path matrix."""
        graph = WeightedGraph(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)])
        points = PointSet(SpaceSpec(SpaceKind.GRAPH), [3, 0], graph=graph)
        assert np.array_equal(pairwise_distances(points).entries, [[0.0, 3.0], [3.0, 0.0]])

    def test_strings(self):
        """Test pairwise edit distances."""
        points = PointSet(SpaceSpec(SpaceKind.STRING), ["kitten", "sitting", "kit"])
        d = pairwise_distances(points).entries
        assert (d[0, 1], d[0, 2], d[1, 2]) == (3.0, 3.0, 5.0)


class TestPersistence:
    def test_plot_data_round_trip(self, tmp_path):
        """Test the fixed header and row parsing."""
        rows = [("sphere(64)", "-", 2.0, 0.5, 0, 1.25), ("sphere(64)", "-", 2.0, 0.5, 1, -1e-3)]
        path = write_plot_data(rows, str(tmp_path / "out" / "plot.csv"))
        with open(path, "rb") as handle:
            raw = handle.read()
        assert raw.startswith(",".join(CSV_HEADER).encode() + b"\n")
        assert b"\r\n" not in raw
        assert read_plot_data(path) == rows

    def test_plot_data_bad_header(self, tmp_path):
        """Test that foreign CSV files are rejected."""
        path = tmp_path / "other.csv"
        path.write_text("a,b\n1,2\n", encoding="utf-8")
        with pytest.raises(ValidationError, match="header"):
            read_plot_data(str(path))

    def test_plot_data_malformed_row(self, tmp_path):
        """Test that a row with a non-numeric eigenvalue names its line."""
        path = tmp_path / "bad.csv"
        path.write_text(",".join(CSV_HEADER) + "\nsphere,-,2.0,0.5,0,oops\n", encoding="utf-8")
        with pytest.raises(ValidationError, match=":2:"):
            read_plot_data(str(path))

    def test_result_document(self, tmp_path):
        """Test sorted keys, a trailing newline and LF endings."""
        path = write_result_document({"b": 1, "a": [1.5, "λ"]}, str(tmp_path / "r.json"))
        text = open(path, encoding="utf-8").read()
        assert text.index('"a"') < text.index('"b"')
        assert text.endswith("}\n") and "\r" not in text
        assert read_result_document(path) == {"a": [1.5, "λ"], "b": 1}

    def test_concurrent_writes_release_locks(self, tmp_path):
        """Test that parallel writes to one path leave a whole file and no lock entries."""
        path = str(tmp_path / "shared.csv")
        batches = [[("euclidean(3)", "-", 1.0, 0.1, i, float(k)) for i in range(50)]
                   for k in range(8)]
        with ThreadPoolExecutor(max_workers=4) as pool:
            list(pool.map(lambda rows: write_plot_data(rows, path), batches))
        assert read_plot_data(path) in batches
        assert persistence._path_locks == {}

    def test_result_document_not_json(self, tmp_path):
        """Test that a broken document raises ValidationError."""
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(ValidationError):
            read_result_document(str(path))

    def test_distance_matrix_round_trip(self, tmp_path, k23_distances):
        """Test saving and loading a distance matrix file."""
        path = save_distance_matrix(k23_distances, str(tmp_path / "k23.txt"))
        assert np.array_equal(load_distance_matrix(path).entries, k23_distances.entries)

    @pytest.mark.parametrize("content, message", [
        ("", "empty"),
        ("0 1\n1\n", "square"),
        ("0 x\nx 0\n", "non-numeric"),
        ("0 1\n2 0\n", "not symmetric"),
    ])
    def test_invalid_matrix_files(self, tmp_path, content, message):
        """Test empty, ragged, non-numeric and asymmetric files."""
        path = tmp_path / "d.txt"
        path.write_text(content, encoding="utf-8")
        with pytest.raises(ValidationError, match=message):
            load_distance_matrix(str(path))

    def test_undecodable_file(self, tmp_path):
        """Test that bytes outside UTF-8 raise ValidationError naming the file."""
        path = tmp_path / "d.txt"
        path.write_bytes(b"0 1\n\xff 0\n")
        with pytest.raises(ValidationError, match="d.txt"):
            load_distance_matrix(str(path))

    def test_missing_file(self, tmp_path):
        """Test that unreadable files raise OSError."""
        with pytest.raises(OSError):
            load_distance_matrix(str(tmp_path / "missing.txt"))

    def test_saved_matrix_is_exact(self, tmp_path):
        """Test that repr keeps every bit of the entries."""
        d = DistanceMatrix(np.array([[0.0, 1.0 / 3.0], [1.0 / 3.0, 0.0]]))
        path = save_distance_matrix(d, str(tmp_path / "third.txt"))
        assert load_distance_matrix(path).entries[0, 1] == 1.0 / 3.0
