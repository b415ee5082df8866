"""
Experiment Runner Module

This module runs eigenspectrum experiments end to end:
1. Sampling a point set for the configured space
2. Distance matrices for every configured metric variant
3. CND verdicts and lambda-sweeps for every kernel exponent
4. Plot-data and result-document files

It also assembles the five reference panels:
  a. random 3 x 3 SPD matrices under four metrics
  b. unit descriptor vectors on a high-dimensional sphere
  c. lines (k = 1) on a Grassmannian, intrinsic and chordal
  d. 15-dimensional subspaces of R^100, intrinsic
  e. shortest paths on a neighbour graph of a two-cluster cloud

Key Features:
- Cells (variant, q) run on a thread pool when workers > 1; results
  are ordered by cell, so files do not depend on scheduling
- Identical configurations produce byte-identical files

Dependencies:
    - numpy: array handling
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from geo_kernel_lab import __version__
from geo_kernel_lab.common.errors import ValidationError
from geo_kernel_lab.common.LabBase import LabBase
from geo_kernel_lab.common.SpaceSpec import SpaceKind, SpaceSpec, VARIANTS
from geo_kernel_lab.config.lab_config import LabConfig
from geo_kernel_lab.config.logging_config import LoggingConfig
from geo_kernel_lab.harness.pairwise import pairwise_distances
from geo_kernel_lab.harness.persistence import PlotRow, write_plot_data, write_result_document
from geo_kernel_lab.harness.sampling import SPD_RIDGE, build_point_set
from geo_kernel_lab.spectral.eigen import cnd_report
from geo_kernel_lab.spectral.SpectrumReport import LambdaSweep, SpectrumReport
from geo_kernel_lab.spectral.sweeps import default_lambda_grid, lambda_sweep, validate_grid

logger = LoggingConfig.get_logger(__name__)

DEFAULT_Q_VALUES = (1.0, 2.0)
FORMATS = ("csv", "structured")


@dataclass(frozen=True)
class ExperimentConfig:
    """
    One experiment: a space, a seeded sample and the kernels to sweep.

    Attributes:
        space (SpaceSpec): Space to sample
        n (int): Sample size, at least 2
        seed (int): RNG seed
        q_values (tuple): Kernel exponents
        lambda_grid (tuple): Bandwidths; the default grid when empty
        variants (tuple): Metric variants to compare (spd, grassmann);
            the space's own variant when empty
        name (str): Stem of the output file names
        epsilon (float): Neighbourhood radius for graph samples
        knn (int): Neighbour count for graph samples
    """

    space: SpaceSpec
    n: int
    seed: int
    q_values: Tuple[float, ...] = DEFAULT_Q_VALUES
    lambda_grid: Tuple[float, ...] = ()
    variants: Tuple[str, ...] = ()
    name: str = "experiment"
    epsilon: Optional[float] = None
    knn: Optional[int] = None

    def __post_init__(self) -> None:
        if int(self.n) < 2:
            raise ValidationError(f"experiments need n >= 2, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "seed", int(self.seed))
        if not self.q_values or any(not float(q) > 0.0 for q in self.q_values):
            raise ValidationError(f"q values must be positive, got {self.q_values}")
        object.__setattr__(self, "q_values", tuple(float(q) for q in self.q_values))
        grid = tuple(validate_grid(self.lambda_grid or default_lambda_grid()))
        object.__setattr__(self, "lambda_grid", grid)

        variants = tuple(self.variants) or (
            (self.space.metric_variant,) if self.space.metric_variant else ())
        for variant in variants:
            if self.space.kind not in VARIANTS:
                raise ValidationError(f"{self.space.kind.value} has no metric variants")
            self.space.with_variant(variant)
        object.__setattr__(self, "variants", variants)

        if self.space.kind is SpaceKind.GRAPH:
            if self.epsilon is not None and self.knn is not None:
                raise ValidationError("give at most one of epsilon or knn")
            if self.epsilon is not None and not float(self.epsilon) > 0.0:
                raise ValidationError(f"epsilon must be positive, got {self.epsilon}")
            if self.knn is not None and int(self.knn) < 1:
                raise ValidationError(f"knn must be at least 1, got {self.knn}")
        elif self.epsilon is not None or self.knn is not None:
            raise ValidationError("epsilon and knn apply to graph spaces only")

    def cells(self) -> List[Tuple[Optional[str], float]]:
        """(variant, q) combinations in output order."""
        return [(variant, q) for variant in (self.variants or (None,))
                for q in self.q_values]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "space": self.space.to_dict(),
            "n": self.n,
            "seed": self.seed,
            "q_values": list(self.q_values),
            "lambda_grid": list(self.lambda_grid),
            "variants": list(self.variants),
            "name": self.name,
            "epsilon": self.epsilon,
            "knn": self.knn,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ExperimentConfig":
        return cls(
            space=SpaceSpec.from_dict(data["space"]),
            n=data["n"],
            seed=data["seed"],
            q_values=tuple(data["q_values"]),
            lambda_grid=tuple(data["lambda_grid"]),
            variants=tuple(data["variants"]),
            name=data.get("name", "experiment"),
            epsilon=data.get("epsilon"),
            knn=data.get("knn"),
        )


@dataclass
class ExperimentResult:
    """
    Everything an experiment computed.

    Attributes:
        config (ExperimentConfig): The configuration that was run
        reports (list): One Gram SpectrumReport per (variant, q, lambda)
        sweeps (list): One LambdaSweep per (variant, q)
        cnd (list): One CND SpectrumReport per variant
        provenance (dict): Seed, library version and sampler description
    """

    config: ExperimentConfig
    reports: List[SpectrumReport] = field(default_factory=list)
    sweeps: List[LambdaSweep] = field(default_factory=list)
    cnd: List[SpectrumReport] = field(default_factory=list)
    provenance: Dict[str, Any] = field(default_factory=dict)

    def sweep_for(self, variant: Optional[str], q: float) -> LambdaSweep:
        for (cell_variant, cell_q), sweep in zip(self.config.cells(), self.sweeps):
            if cell_variant == variant and cell_q == float(q):
                return sweep
        raise KeyError(f"no sweep for variant={variant} q={q}")

    def plot_rows(self) -> List[PlotRow]:
        return spectrum_rows(self.reports, self.config.space)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "config": self.config.to_dict(),
            "reports": [r.to_dict() for r in self.reports],
            "sweeps": [s.to_dict() for s in self.sweeps],
            "cnd": [r.to_dict() for r in self.cnd],
            "provenance": dict(self.provenance),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ExperimentResult":
        return cls(
            config=ExperimentConfig.from_dict(data["config"]),
            reports=[SpectrumReport.from_dict(r) for r in data["reports"]],
            sweeps=[LambdaSweep.from_dict(s) for s in data["sweeps"]],
            cnd=[SpectrumReport.from_dict(r) for r in data["cnd"]],
            provenance=dict(data["provenance"]),
        )


def spectrum_rows(reports: Sequence[SpectrumReport],
                  default_space: Optional[SpaceSpec] = None) -> List[PlotRow]:
    """Plot-data rows (one per eigenvalue) of Gram spectrum reports."""
    rows = []
    for report in reports:
        space = report.space or default_space
        kind = space.kind.value if space else ""
        variant = (space.metric_variant or "") if space else ""
        for index, value in enumerate(report.eigenvalues):
            rows.append((kind, variant, report.kernel.q, report.kernel.lam,  # type: ignore[union-attr]
                         index, value))
    return rows


def sampler_description(space: SpaceSpec) -> str:
    descriptions = {
        SpaceKind.EUCLIDEAN: "standard normal vectors",
        SpaceKind.LQ: "standard normal vectors",
        SpaceKind.SPHERE: "normalized standard normal vectors",
        SpaceKind.PROJECTIVE: "normalized standard normal vectors",
        SpaceKind.HYPERBOLIC: "exp map of standard normal tangent vectors at (1, 0, ..., 0)",
        SpaceKind.SPD: f"G^T G + {SPD_RIDGE:g} I, G standard normal",
        SpaceKind.GRASSMANN: "QR of standard normal frames",
        SpaceKind.NORMAL: "mu ~ N(0, 1), log sigma ~ N(0, 0.25)",
        SpaceKind.GRAPH: "neighbour graph on a two-cluster 2-D Gaussian mixture",
        SpaceKind.TREE: "random recursive tree, weights uniform on [0.5, 2]",
        SpaceKind.STRING: "distinct random strings over 'abcd', lengths 3..8",
    }
    return descriptions[space.kind]


class ExperimentRunner(LabBase):
    """
    Runs experiments and writes their result files.

    Attributes:
        config (LabConfig): Environment defaults
        workers (int): Threads for independent (variant, q) cells
    """

    def run(self, experiment: ExperimentConfig) -> ExperimentResult:
        """
        Sample, compute distances and sweep every (variant, q) cell.

        Args:
            experiment (ExperimentConfig): What to run

        Returns:
            ExperimentResult: Reports ordered by variant, q and lambda
        """
        logger.info("Running %s: %s, n=%d, seed=%d", experiment.name,
                    experiment.space.describe(), experiment.n, experiment.seed)
        points = build_point_set(experiment.space, experiment.n, experiment.seed,
                                 experiment.epsilon, experiment.knn)
        matrices = {variant: pairwise_distances(points, variant, self.workers)
                    for variant in (experiment.variants or (None,))}

        def run_cell(cell: Tuple[Optional[str], float]) -> LambdaSweep:
            variant, q = cell
            return lambda_sweep(matrices[variant], q, experiment.lambda_grid)

        cells = experiment.cells()
        if self.workers > 1 and len(cells) > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                sweeps = list(pool.map(run_cell, cells))
        else:
            sweeps = [run_cell(cell) for cell in cells]

        result = ExperimentResult(
            config=experiment,
            reports=[report for sweep in sweeps for report in sweep.reports],
            sweeps=sweeps,
            cnd=[cnd_report(matrices[v]) for v in (experiment.variants or (None,))],
            provenance={
                "library": "GeoKernelLab",
                "version": __version__,
                "seed": experiment.seed,
                "sampler": sampler_description(experiment.space),
            },
        )
        for (variant, q), sweep in zip(cells, sweeps):
            log = logger.info if sweep.passed else logger.warning
            log("%s variant=%s q=%g: %s", experiment.name, variant or "-",
                q, sweep.describe())
        return result

    def write(self, result: ExperimentResult, out_dir: Optional[str] = None,
              formats: Sequence[str] = FORMATS) -> List[str]:
        """
        Write the result files of one experiment.

        Returns:
            list: Paths written (``<name>.csv`` and/or ``<name>.json``)
        """
        out_dir = out_dir or self.config.get_output_dir()
        paths = []
        for fmt in formats:
            if fmt not in FORMATS:
                raise ValidationError(f"unknown output format {fmt!r}")
            if fmt == "csv":
                path = os.path.join(out_dir, f"{result.config.name}.csv")
                paths.append(write_plot_data(result.plot_rows(), path))
            else:
                path = os.path.join(out_dir, f"{result.config.name}.json")
                paths.append(write_result_document(self._serialize_lab_data(result), path))
        return paths

    def reproduce(self, seed: Optional[int] = None,
                  lambda_grid: Sequence[float] = ()) -> List[ExperimentResult]:
        """Run the five reference panels with their controls."""
        seed = self.config.seed if seed is None else int(seed)
        return [self.run(panel) for panel in reference_panels(seed, lambda_grid)]


def reference_panels(seed: int, lambda_grid: Sequence[float] = ()) -> List[ExperimentConfig]:
    grid = tuple(lambda_grid)
    return [
        ExperimentConfig(
            SpaceSpec(SpaceKind.SPD, dim=3, metric_variant="affine_invariant"),
            n=100, seed=seed, lambda_grid=grid, name="spd_panel",
            variants=("affine_invariant", "fisher", "frobenius", "log_euclidean")),
        ExperimentConfig(
            SpaceSpec(SpaceKind.SPHERE, dim=64),
            n=200, seed=seed, lambda_grid=grid, name="sphere_panel"),
        ExperimentConfig(
            SpaceSpec(SpaceKind.GRASSMANN, dim=50, metric_variant="intrinsic", subspace_dim=1),
            n=100, seed=seed, lambda_grid=grid, name="grassmann_k1_panel",
            variants=("intrinsic", "chordal")),
        ExperimentConfig(
            SpaceSpec(SpaceKind.GRASSMANN, dim=100, metric_variant="intrinsic", subspace_dim=15),
            n=100, seed=seed, lambda_grid=grid, name="grassmann_k15_panel"),
        ExperimentConfig(
            SpaceSpec(SpaceKind.GRAPH),
            n=124, seed=seed, lambda_grid=grid, name="graph_panel"),
    ]


def run_experiment(experiment: ExperimentConfig, out_dir: Optional[str] = None,
                   formats: Sequence[str] = FORMATS,
                   lab_config: Optional[LabConfig] = None,
                   workers: Optional[int] = None) -> Tuple[ExperimentResult, List[str]]:
    """Run one experiment and write its files."""
    runner = ExperimentRunner(lab_config, workers)
    result = runner.run(experiment)
    return result, runner.write(result, out_dir, formats)
