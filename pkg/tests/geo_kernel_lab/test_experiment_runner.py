"""
Tests for the experiment runner and the reference panels.
"""
import logging
import os

import pytest

from geo_kernel_lab import __version__
from geo_kernel_lab.common.errors import ValidationError
from geo_kernel_lab.common.SpaceSpec import SpaceKind, SpaceSpec
from geo_kernel_lab.harness import (
    ExperimentConfig, ExperimentRunner, reference_panels, run_experiment)
from geo_kernel_lab.harness.ExperimentRunner import ExperimentResult
from geo_kernel_lab.harness.persistence import CSV_HEADER, read_plot_data, read_result_document

EUCLIDEAN = SpaceSpec(SpaceKind.EUCLIDEAN, dim=3)
SPD = SpaceSpec(SpaceKind.SPD, dim=3, metric_variant="affine_invariant")


@pytest.fixture
def spd_experiment(small_grid):
    """Provide a small two-variant SPD experiment."""
    return ExperimentConfig(SPD, n=12, seed=5, lambda_grid=tuple(small_grid),
                            variants=("affine_invariant", "log_euclidean"), name="spd_small")


@pytest.fixture
def runner(lab_config):
    """Provide a sequential runner writing below tmp_path."""
    return ExperimentRunner(lab_config, workers=1)


class TestExperimentConfig:
    def test_defaults(self):
        """Test the default exponents, grid and variant."""
        config = ExperimentConfig(SPD, n=10, seed=0)
        assert config.q_values == (1.0, 2.0)
        assert len(config.lambda_grid) == 20
        assert config.variants == ("affine_invariant",)
        assert ExperimentConfig(EUCLIDEAN, n=10, seed=0).variants == ()

    def test_cells_order(self, spd_experiment):
        """Test that cells run variant-major, then q."""
        assert spd_experiment.cells() == [("affine_invariant", 1.0), ("affine_invariant", 2.0),
                                          ("log_euclidean", 1.0), ("log_euclidean", 2.0)]
        assert ExperimentConfig(EUCLIDEAN, n=3, seed=0, q_values=(2,)).cells() == [(None, 2.0)]

    @pytest.mark.parametrize("kwargs", [
        dict(space=EUCLIDEAN, n=1, seed=0),
        dict(space=EUCLIDEAN, n=5, seed=0, q_values=(0.0,)),
        dict(space=EUCLIDEAN, n=5, seed=0, q_values=()),
        dict(space=EUCLIDEAN, n=5, seed=0, lambda_grid=(2.0, 1.0)),
        dict(space=EUCLIDEAN, n=5, seed=0, variants=("fisher",)),
        dict(space=SPD, n=5, seed=0, variants=("chordal",)),
        dict(space=EUCLIDEAN, n=5, seed=0, epsilon=1.0),
        dict(space=SpaceSpec(SpaceKind.GRAPH), n=5, seed=0, epsilon=1.0, knn=2),
        dict(space=SpaceSpec(SpaceKind.GRAPH), n=5, seed=0, epsilon=-1.0),
        dict(space=SpaceSpec(SpaceKind.GRAPH), n=5, seed=0, knn=0),
    ])
    def test_invalid_configs(self, kwargs):
        """Test that invalid experiments are rejected on construction."""
        with pytest.raises(ValidationError):
            ExperimentConfig(**kwargs)

    def test_dict_round_trip(self, spd_experiment):
        """Test to_dict/from_dict."""
        assert ExperimentConfig.from_dict(spd_experiment.to_dict()) == spd_experiment


class TestExperimentRunner:
    def test_run_counts(self, runner, spd_experiment, small_grid):
        """Test one report per (variant, q, lambda) and one CND report per variant."""
        result = runner.run(spd_experiment)
        assert len(result.sweeps) == 4
        assert len(result.reports) == 4 * len(small_grid)
        assert [r.space.metric_variant for r in result.cnd] == ["affine_invariant",
                                                                 "log_euclidean"]
        assert result.provenance == {"library": "GeoKernelLab", "version": __version__,
                                     "seed": 5, "sampler": "G^T G + 0.001 I, G standard normal"}

    def test_log_euclidean_passes(self, runner, spd_experiment):
        """Test that the flat log-Euclidean metric gives PD kernels."""
        result = runner.run(spd_experiment)
        assert result.sweep_for("log_euclidean", 1.0).passed
        assert result.sweep_for("log_euclidean", 2.0).passed
        with pytest.raises(KeyError):
            result.sweep_for("fisher", 1.0)

    def test_plot_rows(self, runner, small_grid):
        """Test one plot row per eigenvalue."""
        result = runner.run(ExperimentConfig(EUCLIDEAN, n=6, seed=1,
                                             lambda_grid=tuple(small_grid)))
        rows = result.plot_rows()
        assert len(rows) == 2 * len(small_grid) * 6
        assert rows[0][:5] == ("euclidean", "", 1.0, small_grid[0], 0)

    def test_files_are_reproducible(self, runner, spd_experiment, tmp_path):
        """Test that identical configurations write byte-identical files."""
        first = runner.write(runner.run(spd_experiment), str(tmp_path / "one"))
        second = runner.write(runner.run(spd_experiment), str(tmp_path / "two"))
        assert [os.path.basename(p) for p in first] == ["spd_small.csv", "spd_small.json"]
        for a, b in zip(first, second):
            with open(a, "rb") as fa, open(b, "rb") as fb:
                assert fa.read() == fb.read()

    def test_result_document_round_trip(self, runner, spd_experiment, tmp_path):
        """Test that the written document restores the result."""
        result = runner.run(spd_experiment)
        (path,) = runner.write(result, str(tmp_path), formats=["structured"])
        assert ExperimentResult.from_dict(read_result_document(path)) == result

    def test_csv_output(self, runner, spd_experiment, tmp_path):
        """Test the plot-data file of a run."""
        result = runner.run(spd_experiment)
        (path,) = runner.write(result, str(tmp_path), formats=["csv"])
        with open(path, encoding="utf-8") as handle:
            assert handle.readline().strip() == ",".join(CSV_HEADER)
        assert len(read_plot_data(path)) == len(result.plot_rows())

    def test_workers_do_not_change_results(self, lab_config, spd_experiment):
        """Test that threaded cells give the same result as sequential ones."""
        sequential = ExperimentRunner(lab_config, workers=1).run(spd_experiment)
        threaded = ExperimentRunner(lab_config, workers=3).run(spd_experiment)
        assert threaded.to_dict() == sequential.to_dict()

    def test_default_output_dir(self, runner, lab_config, small_grid):
        """Test that files go to the configured directory by default."""
        result = runner.run(ExperimentConfig(EUCLIDEAN, n=4, seed=0, name="default_dir",
                                             lambda_grid=tuple(small_grid)))
        paths = runner.write(result)
        assert all(p.startswith(lab_config.get_output_dir()) for p in paths)

    def test_unknown_format(self, runner, spd_experiment, tmp_path):
        """Test that only csv and structured are written."""
        with pytest.raises(ValidationError):
            runner.write(runner.run(spd_experiment), str(tmp_path), formats=["xml"])

    def test_unwritable_directory(self, runner, spd_experiment, tmp_path):
        """Test that an output path blocked by a file raises OSError."""
        blocker = tmp_path / "blocker"
        blocker.write_text("", encoding="utf-8")
        with pytest.raises(OSError):
            runner.write(runner.run(spd_experiment), str(blocker / "out"))

    def test_logs_each_cell(self, runner, small_grid, caplog):
        """Test that every cell's verdict is logged."""
        experiment = ExperimentConfig(EUCLIDEAN, n=5, seed=2, lambda_grid=tuple(small_grid),
                                      name="logged")
        with caplog.at_level(logging.INFO, logger="geo_kernel_lab.harness.ExperimentRunner"):
            runner.run(experiment)
        messages = [r.getMessage() for r in caplog.records]
        assert any("logged variant=- q=1: PD (no violation found" in m for m in messages)
        assert any("logged variant=- q=2: PD (no violation found" in m for m in messages)


class TestReferencePanels:
    def test_panels(self):
        """Test the five reference configurations."""
        panels = reference_panels(seed=3)
        assert [p.name for p in panels] == ["spd_panel", "sphere_panel",
                                            "grassmann_k1_panel", "grassmann_k15_panel",
                                            "graph_panel"]
        assert [p.n for p in panels] == [100, 200, 100, 100, 124]
        assert all(p.seed == 3 for p in panels)
        assert panels[0].variants == ("affine_invariant", "fisher", "frobenius",
                                      "log_euclidean")
        assert panels[2].variants == ("intrinsic", "chordal")
        assert panels[3].space.subspace_dim == 15

    def test_panels_take_a_grid(self):
        """Test that a custom grid reaches every panel."""
        assert all(p.lambda_grid == (0.1, 1.0) for p in reference_panels(0, [0.1, 1.0]))

    def test_run_experiment(self, lab_config, small_grid, tmp_path):
        """Test the one-call helper."""
        experiment = ExperimentConfig(SpaceSpec(SpaceKind.TREE), n=8, seed=4,
                                      lambda_grid=tuple(small_grid), name="tree")
        result, paths = run_experiment(experiment, str(tmp_path), lab_config=lab_config)
        assert all(os.path.exists(p) for p in paths)
        assert result.sweep_for(None, 1.0).passed
