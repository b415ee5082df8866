"""
Tests for the geo-kernel-lab command line.
"""
import json
import os

import pytest

from geo_kernel_lab import __version__
from geo_kernel_lab.harness.persistence import CSV_HEADER, save_distance_matrix
from geo_kernel_lab.main import EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, main

GRID = ["--lambda-grid", "0.1:10:3"]


@pytest.fixture
def k23_file(tmp_path, k23_distances):
    """Provide the K_{2,3} path metric as a matrix file."""
    return save_distance_matrix(k23_distances, str(tmp_path / "k23.txt"))


@pytest.fixture
def asymmetric_file(tmp_path):
    """Provide a matrix file that is not symmetric."""
    path = tmp_path / "bad.txt"
    path.write_text("0 1\n2 0\n", encoding="utf-8")
    return str(path)


class TestCommands:
    def test_sweep(self, capsys):
        """Test one verdict line per exponent."""
        assert main(["sweep", "--n", "8", *GRID]) == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert out == ["q=1: PD (no violation found at n=8 over 3 λ values)",
                       "q=2: PD (no violation found at n=8 over 3 λ values)"]

    def test_spectrum_with_repeated_q(self, capsys):
        """Test that --q selects the kernels."""
        assert main(["spectrum", "--space", "sphere", "--n", "6", "--q", "1",
                     "--lambda", "0.5"]) == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert len(out) == 1 and out[0].startswith("laplacian: PD")

    def test_cnd_from_matrix(self, capsys, k23_file):
        """Test the CND verdict and crosscheck of a matrix file."""
        assert main(["cnd", "--matrix", k23_file, *GRID]) == EXIT_OK
        out = capsys.readouterr().out
        assert "NOT CND" in out
        assert "Schoenberg crosscheck AGREE" in out

    def test_metric_check_sqrt(self, capsys, k23_file):
        """Test the square-root metric check."""
        assert main(["metric-check", "--matrix", k23_file, "--sqrt"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("sqrt metric: metric (no violation")

    def test_cat_check(self, capsys):
        """Test a sampled hyperbolic triangle under CAT(0)."""
        assert main(["cat-check", "--space", "hyperbolic", "--seed", "2",
                     "--samples-per-edge", "2"]) == EXIT_OK
        assert "CAT(0) SATISFIED" in capsys.readouterr().out

    def test_structured_output(self, tmp_path):
        """Test that --out writes the result document."""
        out = tmp_path / "sweep.json"
        assert main(["sweep", "--space", "tree", "--n", "6", "--seed", "3", *GRID,
                     "--out", str(out)]) == EXIT_OK
        document = json.loads(out.read_text(encoding="utf-8"))
        assert document["command"] == "sweep" and document["seed"] == 3
        assert [s["q"] for s in document["sweeps"]] == [1.0, 2.0]

    def test_csv_output(self, tmp_path):
        """Test the plot-data rows of a spectrum."""
        out = tmp_path / "spectrum.csv"
        assert main(["spectrum", "--n", "4", "--format", "csv", "--out", str(out)]) == EXIT_OK
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == ",".join(CSV_HEADER)
        assert len(lines) == 1 + 2 * 4

    def test_seed_from_environment(self, monkeypatch, tmp_path):
        """Test that GEOKERNEL_SEED is the default seed."""
        monkeypatch.setenv("GEOKERNEL_SEED", "11")
        out = tmp_path / "cnd.json"
        assert main(["cnd", "--n", "5", *GRID, "--out", str(out)]) == EXIT_OK
        assert json.loads(out.read_text(encoding="utf-8"))["seed"] == 11

    def test_version(self, capsys):
        """Test --version."""
        assert main(["--version"]) == EXIT_OK
        assert __version__ in capsys.readouterr().out

    def test_log_file(self, monkeypatch, tmp_path):
        """Test that GEOKERNEL_LOG_DIR receives the debug log."""
        monkeypatch.setenv("GEOKERNEL_LOG_DIR", str(tmp_path / "logs"))
        assert main(["sweep", "--n", "4", *GRID]) == EXIT_OK
        assert os.path.exists(tmp_path / "logs" / "geo_kernel_lab.log")


class TestExitCodes:
    @pytest.mark.parametrize("argv", [
        [],
        ["frobnicate"],
        ["sweep", "--bogus"],
        ["sweep", "--space", "torus"],
        ["sweep", "--log-level", "chatty"],
        ["cnd", "--format", "csv"],
        ["sweep", "--n", "0"],
    ])
    def test_usage_errors(self, argv, capsys):
        """Test that usage errors exit with 1."""
        assert main(argv) == EXIT_USAGE
        assert "error" in capsys.readouterr().err

    @pytest.mark.parametrize("argv", [
        ["sweep", "--space", "sphere", "--dim", "0"],
        ["sweep", "--space", "spd", "--variant", "chordal"],
        ["sweep", "--space", "lq", "--q-norm", "2"],
        ["sweep", "--lambda-grid", "10:1:3"],
        ["sweep", "--space", "graph", "--n", "20", "--epsilon", "1e-6"],
        ["cat-check", "--space", "string"],
    ])
    def test_validation_errors(self, argv, capsys):
        """Test that invalid input exits with 2."""
        assert main(argv) == EXIT_VALIDATION
        assert "geo-kernel-lab:" in capsys.readouterr().err

    def test_invalid_matrix_file(self, asymmetric_file):
        """Test that an asymmetric matrix exits with 2."""
        assert main(["metric-check", "--matrix", asymmetric_file]) == EXIT_VALIDATION

    def test_undecodable_matrix_file(self, tmp_path, capsys):
        """Test that a matrix file that is not UTF-8 exits with 2."""
        path = tmp_path / "binary.txt"
        path.write_bytes(b"\xff\xfe0,1\n1,0\n")
        assert main(["cnd", "--matrix", str(path)]) == EXIT_VALIDATION
        assert "UTF-8" in capsys.readouterr().err

    def test_missing_matrix_file(self, tmp_path):
        """Test that a missing file exits with 3."""
        assert main(["cnd", "--matrix", str(tmp_path / "missing.txt")]) == EXIT_IO

    def test_verdicts_do_not_change_exit_code(self, tmp_path, capsys):
        """Test that a failed metric check still exits with 0."""
        path = tmp_path / "long_side.txt"
        path.write_text("0 1 3\n1 0 1\n3 1 0\n", encoding="utf-8")
        assert main(["metric-check", "--matrix", str(path)]) == EXIT_OK
        assert "triangle: 2" in capsys.readouterr().out


class TestReproduce:
    @pytest.mark.slow
    def test_reproduce_twice(self, tmp_path, capsys):
        """Test that two reproduce runs write byte-identical files."""
        for name in ("one", "two"):
            assert main(["reproduce", "--seed", "1", *GRID,
                         "--out", str(tmp_path / name)]) == EXIT_OK
        assert "wrote" in capsys.readouterr().out
        names = sorted(os.listdir(tmp_path / "one"))
        assert len(names) == 10
        for name in names:
            assert (tmp_path / "one" / name).read_bytes() == \
                (tmp_path / "two" / name).read_bytes()
