"""
Tests for the verdict-matrix conformance check.
"""
import logging

import pytest

from geo_kernel_lab.common.SpaceSpec import SpaceKind
from geo_kernel_lab.harness.VerdictMatrix import (
    ROWS, CellResult, Column, RowResult, VerdictMatrix)
from geo_kernel_lab.spectral.eigen import cnd_verdict
from geo_kernel_lab.harness.pairwise import pairwise_distances
from geo_kernel_lab.spectral.SpectrumReport import Verdict


def row(name):
    return next(r for r in ROWS if r.name == name)


class TestRows:
    def test_rows(self):
        """Test the fourteen rows and their unique names."""
        assert len(ROWS) == 14
        assert len({r.name for r in ROWS}) == 14

    @pytest.mark.parametrize("name, expected", [
        ("euclidean", (True, True, True)),
        ("sphere", (True, False, True)),
        ("hyperbolic space", (True, False, True)),
        ("metric tree", (True, False, True)),
        ("spd (log_euclidean)", (True, True, True)),
        ("spd (affine_invariant)", (False, False, False)),
        ("geodesic graph", (False, False, False)),
    ])
    def test_expected_verdicts(self, name, expected):
        """Test the expected CND, Gaussian and Laplacian columns."""
        r = row(name)
        assert tuple(r.expected(c) for c in Column) == expected

    @pytest.mark.parametrize("name, size", [("l_q (q > 2)", 12), ("geodesic graph", 15),
                                            ("strings (edit distance)", 10)])
    def test_planted_rows_are_not_cnd(self, name, size):
        """Test that every planted sample carries a CND violation."""
        points = row(name).sample(size, seed=0)
        assert points.n == size
        assert cnd_verdict(pairwise_distances(points))[0] is Verdict.NOT_CND

    def test_default_sampler(self):
        """Test that rows without a builder sample their space."""
        points = row("sphere").sample(5, seed=1)
        assert points.space.kind is SpaceKind.SPHERE and points.n == 5


class TestCellResult:
    @pytest.mark.parametrize("expected, violations, checked, conforms", [
        (True, 0, True, True),
        (True, 1, True, False),
        (False, 0, True, False),
        (False, 3, True, True),
        (False, 0, False, None),
    ])
    def test_conforms(self, expected, violations, checked, conforms):
        """Test holding, failing and unchecked columns."""
        cell = CellResult(Column.GAUSSIAN, expected, trials=3, violations=violations,
                          checked=checked)
        assert cell.conforms is conforms

    def test_row_result(self):
        """Test that a disagreement or a mismatch breaks conformance."""
        cells = [CellResult(Column.CND, True, 2, 0), CellResult(Column.GAUSSIAN, False, 2, 1),
                 CellResult(Column.LAPLACIAN, True, 2, 0, checked=False)]
        result = RowResult(row("sphere"), cells)
        assert result.conforms
        assert result.cell(Column.LAPLACIAN).conforms is None
        assert "gaussian: 1/2 violations (ok)" in result.describe()
        result.disagreements = 1
        assert not result.conforms
        assert result.to_dict()["cells"][0]["column"] == "cnd"


class TestVerdictMatrix:
    def test_euclidean_row(self, lab_config):
        """Test that the Euclidean row holds everywhere."""
        result = VerdictMatrix(lab_config).check_row(row("euclidean"), sizes=(20,),
                                                         seeds=(0, 1))
        assert result.conforms
        assert all(cell.trials == 2 and cell.violations == 0 for cell in result.cells)
        assert result.disagreements == 0

    def test_planted_string_row(self, lab_config):
        """Test that the planted string row fails CND and Laplacian every time."""
        result = VerdictMatrix(lab_config).check_row(row("strings (edit distance)"),
                                                         sizes=(15,), seeds=(0, 1))
        assert result.cell(Column.CND).violations == 2
        assert result.cell(Column.LAPLACIAN).violations == 2
        assert result.disagreements == 0

    def test_log_level_follows_conformance(self, lab_config, mocker):
        """Test that a conforming row is logged at INFO."""
        checker = VerdictMatrix(lab_config)
        info = mocker.patch.object(
            logging.getLogger("geo_kernel_lab.harness.VerdictMatrix"), "info")
        checker.check_row(row("euclidean"), sizes=(10,), seeds=(0,))
        info.assert_called_once()
        assert info.call_args[0][0] == "Conforms: %s"

    @pytest.mark.slow
    def test_full_matrix(self):
        """Test every row at the default sizes and seeds."""
        results = VerdictMatrix().run()
        assert len(results) == len(ROWS)
        for result in results:
            assert result.conforms, result.describe()
            assert result.disagreements == 0
