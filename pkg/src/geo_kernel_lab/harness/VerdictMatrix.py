"""
Verdict Matrix Module

This module checks the known verdict matrix of geodesic exponential
kernels against sampled evidence. Each row names a space and whether its
distance is CND and whether its Gaussian (q = 2) and Laplacian (q = 1)
kernels are PD for every bandwidth.

A row conforms when:
1. Every column expected to hold never shows a violation over all
   sample sizes, seeds and grid bandwidths
2. Every column expected to fail shows at least one violation
3. No sample produces a Schoenberg disagreement

Rows whose violation is known to exist but is too weak to surface at
desk-scale samples list those columns as unchecked; they are reported,
not judged. Samples for the l_q, graph and string rows contain a planted
K_{2,3} configuration, so their violations do not depend on luck.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Sequence

from geo_kernel_lab.common.LabBase import LabBase
from geo_kernel_lab.common.PointSet import PointSet
from geo_kernel_lab.common.SpaceSpec import SpaceKind, SpaceSpec
from geo_kernel_lab.config.logging_config import LoggingConfig
from geo_kernel_lab.harness.pairwise import pairwise_distances
from geo_kernel_lab.harness.sampling import (
    K23_STRINGS, attach_graph, build_neighbor_graph, build_point_set,
    epsilon_for_connectivity, k23_graph, k23_lq_points, k23_strings,
    sample_points, sample_strings, two_cluster_cloud)
from geo_kernel_lab.spectral.eigen import cnd_verdict
from geo_kernel_lab.spectral.SpectrumReport import CrosscheckStatus, Verdict
from geo_kernel_lab.spectral.sweeps import lambda_sweep, schonberg_crosscheck

logger = LoggingConfig.get_logger(__name__)

DEFAULT_SIZES = (50, 200)
DEFAULT_SEEDS = tuple(range(5))
PLANTED_SIZE = 5
LQ_EXPONENT = 8.0
LQ_DIM = 5
BRIDGE_WEIGHT = 1.0


class Column(str, Enum):
    CND = "cnd"
    GAUSSIAN = "gaussian"
    LAPLACIAN = "laplacian"


Builder = Callable[[int, int], PointSet]


def _planted_lq(n: int, seed: int) -> PointSet:
    planted = k23_lq_points(LQ_EXPONENT)
    rest = sample_points(planted.space, n - PLANTED_SIZE, seed)
    return PointSet(planted.space, list(rest.elements) + list(planted.elements))


def _planted_graph(n: int, seed: int) -> PointSet:
    cloud = two_cluster_cloud(n - PLANTED_SIZE, seed)
    base = build_neighbor_graph(cloud, epsilon=epsilon_for_connectivity(cloud))
    graph = attach_graph(base, k23_graph(), (0, 0, BRIDGE_WEIGHT))
    return PointSet(SpaceSpec(SpaceKind.GRAPH), list(range(n)), graph=graph)


def _planted_strings(n: int, seed: int) -> PointSet:
    words = sample_strings(n - PLANTED_SIZE, seed, exclude=K23_STRINGS) + k23_strings()
    return PointSet(SpaceSpec(SpaceKind.STRING), words)


@dataclass(frozen=True)
class VerdictRow:
    """
    One row of the verdict matrix.

    Attributes:
        name (str): Row label
        space (SpaceSpec): Space sampled for the row
        cnd (bool): Whether the distance is CND
        gaussian (bool): Whether the q = 2 kernel is PD for every lambda
        laplacian (bool): Whether the q = 1 kernel is PD for every lambda
        unchecked (frozenset): Columns reported but not judged
        builder (callable): ``(n, seed) -> PointSet``; ``build_point_set``
            when None
    """

    name: str
    space: SpaceSpec
    cnd: bool
    gaussian: bool
    laplacian: bool
    unchecked: FrozenSet[Column] = frozenset()
    builder: Optional[Builder] = field(default=None, compare=False, repr=False)

    def expected(self, column: Column) -> bool:
        return {Column.CND: self.cnd, Column.GAUSSIAN: self.gaussian,
                Column.LAPLACIAN: self.laplacian}[column]

    def sample(self, n: int, seed: int) -> PointSet:
        if self.builder is not None:
            return self.builder(n, seed)
        return build_point_set(self.space, n, seed)


def _spd(variant: str, cnd: bool, gaussian: bool, laplacian: bool,
         unchecked: FrozenSet[Column] = frozenset()) -> VerdictRow:
    return VerdictRow(f"spd ({variant})",
                     SpaceSpec(SpaceKind.SPD, dim=3, metric_variant=variant),
                     cnd, gaussian, laplacian, unchecked)


ROWS: List[VerdictRow] = [
    VerdictRow("euclidean", SpaceSpec(SpaceKind.EUCLIDEAN, dim=3), True, True, True),
    VerdictRow("l_q (q > 2)", SpaceSpec(SpaceKind.LQ, dim=LQ_DIM, q_norm=LQ_EXPONENT),
              False, False, False, builder=_planted_lq),
    VerdictRow("sphere", SpaceSpec(SpaceKind.SPHERE, dim=64), True, False, True),
    VerdictRow("real projective space", SpaceSpec(SpaceKind.PROJECTIVE, dim=3),
              False, False, False),
    VerdictRow("grassmannian",
              SpaceSpec(SpaceKind.GRASSMANN, dim=3, metric_variant="intrinsic",
                        subspace_dim=1),
              False, False, False),
    _spd("affine_invariant", False, False, False,
         frozenset({Column.CND, Column.LAPLACIAN})),
    _spd("fisher", False, False, False, frozenset({Column.CND, Column.LAPLACIAN})),
    _spd("frobenius", True, True, True),
    _spd("log_euclidean", True, True, True),
    VerdictRow("hyperbolic space", SpaceSpec(SpaceKind.HYPERBOLIC, dim=2), True, False, True),
    VerdictRow("1-dimensional normal distributions", SpaceSpec(SpaceKind.NORMAL),
              True, False, True, frozenset({Column.GAUSSIAN})),
    VerdictRow("metric tree", SpaceSpec(SpaceKind.TREE), True, False, True),
    VerdictRow("geodesic graph", SpaceSpec(SpaceKind.GRAPH), False, False, False,
              builder=_planted_graph),
    VerdictRow("strings (edit distance)", SpaceSpec(SpaceKind.STRING), False, False, False,
              builder=_planted_strings),
]


@dataclass
class CellResult:
    """
    Evidence for one column of one row.

    Attributes:
        column (Column): Which column
        expected (bool): True when the property should hold
        trials (int): Samples examined
        violations (int): Samples showing a violation
        checked (bool): False for columns that are only reported
    """

    column: Column
    expected: bool
    trials: int = 0
    violations: int = 0
    checked: bool = True

    @property
    def conforms(self) -> Optional[bool]:
        if not self.checked:
            return None
        return self.violations == 0 if self.expected else self.violations > 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "column": self.column.value,
            "expected": self.expected,
            "trials": self.trials,
            "violations": self.violations,
            "checked": self.checked,
            "conforms": self.conforms,
        }


@dataclass
class RowResult:
    row: VerdictRow
    cells: List[CellResult]
    disagreements: int = 0
    unresolved: int = 0

    @property
    def conforms(self) -> bool:
        return self.disagreements == 0 and all(
            cell.conforms is not False for cell in self.cells)

    def cell(self, column: Column) -> CellResult:
        return next(cell for cell in self.cells if cell.column is column)

    def describe(self) -> str:
        marks = []
        for cell in self.cells:
            observed = "holds" if cell.violations == 0 else f"{cell.violations}/{cell.trials} violations"
            status = {None: "reported", True: "ok", False: "MISMATCH"}[cell.conforms]
            marks.append(f"{cell.column.value}: {observed} ({status})")
        return f"{self.row.name}: " + "; ".join(marks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "row": self.row.name,
            "space": self.row.space.to_dict(),
            "cells": [cell.to_dict() for cell in self.cells],
            "disagreements": self.disagreements,
            "unresolved": self.unresolved,
            "conforms": self.conforms,
        }


class VerdictMatrix(LabBase):
    """
    Checks sampled verdicts against the expected verdict matrix.

    Attributes:
        config (LabConfig): Supplies the lambda grid
        workers (int): Threads for the lambda-sweeps
    """

    def check_row(self, row: VerdictRow, sizes: Sequence[int] = DEFAULT_SIZES,
                  seeds: Sequence[int] = DEFAULT_SEEDS) -> RowResult:
        """
        Sample the row at every (size, seed) and tally violations.

        The Laplacian column counts a violation when the q = 1 sweep fails
        or when the Schoenberg crosscheck finds a non-PD Gram matrix along
        the CND witness at a bandwidth off the grid.

        Returns:
            RowResult: Per-column tallies and the crosscheck counts
        """
        grid = self.config.get_lambda_grid()
        cells = {column: CellResult(column, row.expected(column),
                                    checked=column not in row.unchecked)
                 for column in Column}
        result = RowResult(row, list(cells.values()))

        for n in sizes:
            for seed in seeds:
                distances = pairwise_distances(row.sample(int(n), int(seed)),
                                               workers=self.workers)
                verdict, _ = cnd_verdict(distances)
                crosscheck = schonberg_crosscheck(distances, grid, self.workers)
                gaussian = lambda_sweep(distances, 2.0, grid, self.workers)

                laplacian_fails = (not crosscheck.sweep.passed) or (
                    crosscheck.status is CrosscheckStatus.AGREE
                    and crosscheck.probe_lambda is not None)
                observed = {
                    Column.CND: verdict is Verdict.NOT_CND,
                    Column.GAUSSIAN: not gaussian.passed,
                    Column.LAPLACIAN: laplacian_fails,
                }
                for column, violated in observed.items():
                    cells[column].trials += 1
                    cells[column].violations += int(violated)
                if crosscheck.status is CrosscheckStatus.DISAGREE:
                    result.disagreements += 1
                elif crosscheck.status is CrosscheckStatus.UNRESOLVED:
                    result.unresolved += 1
                logger.debug("%s n=%d seed=%d: cnd=%s gaussian=%s laplacian=%s",
                             row.name, n, seed, verdict.value,
                             gaussian.verdict.value, crosscheck.status.value)

        if result.conforms:
            logger.info("Conforms: %s", result.describe())
        else:
            logger.warning("Does not conform: %s", result.describe())
        return result

    def run(self, rows: Optional[Sequence[VerdictRow]] = None,
            sizes: Sequence[int] = DEFAULT_SIZES,
            seeds: Sequence[int] = DEFAULT_SEEDS) -> List[RowResult]:
        """Check every row (all of ``ROWS`` by default)."""
        return [self.check_row(row, sizes, seeds) for row in (rows or ROWS)]
