"""
Command-line entry point: ``geo-kernel-lab <command> [flags]``.

Exit codes: 0 success, 1 usage error, 2 input validation error, 3 I/O error.
Verdicts never change the exit code.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, NoReturn, Optional, Sequence

from geo_kernel_lab import __version__
from geo_kernel_lab.common.DistanceMatrix import DistanceMatrix
from geo_kernel_lab.common.errors import GeoKernelError
from geo_kernel_lab.common.LabBase import LabBase
from geo_kernel_lab.common.SpaceSpec import DIMENSIONED_KINDS, SpaceKind, SpaceSpec
from geo_kernel_lab.config import LabConfig, LoggingConfig
from geo_kernel_lab.harness.ExperimentRunner import ExperimentRunner, spectrum_rows
from geo_kernel_lab.harness.pairwise import pairwise_distances
from geo_kernel_lab.harness.persistence import (
    load_distance_matrix, write_plot_data, write_result_document)
from geo_kernel_lab.harness.sampling import build_point_set
from geo_kernel_lab.kernels.cnd import sqrt_distance_matrix
from geo_kernel_lab.kernels.exponential import KernelSpec
from geo_kernel_lab.metric_props.axioms import check_metric_axioms
from geo_kernel_lab.metric_props.cat import DEFAULT_SAMPLES_PER_EDGE, cat_check
from geo_kernel_lab.spectral.eigen import cnd_report, gram_report
from geo_kernel_lab.spectral.sweeps import lambda_sweep, parse_lambda_grid, schonberg_crosscheck

logger = LoggingConfig.get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_IO = 3

DEFAULT_N = 50
DEFAULT_DIMS = {
    SpaceKind.EUCLIDEAN: 3,
    SpaceKind.LQ: 5,
    SpaceKind.SPHERE: 3,
    SpaceKind.PROJECTIVE: 3,
    SpaceKind.HYPERBOLIC: 2,
    SpaceKind.SPD: 3,
    SpaceKind.GRASSMANN: 5,
}
DEFAULT_VARIANTS = {SpaceKind.SPD: "affine_invariant", SpaceKind.GRASSMANN: "intrinsic"}
DEFAULT_Q_NORM = 8.0
DEFAULT_LAMBDA = 1.0
CSV_COMMANDS = ("spectrum", "sweep", "reproduce")


class UsageError(Exception):
    pass


class LabArgumentParser(argparse.ArgumentParser):
    """Reports usage errors with exit status 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--space", choices=[k.value for k in SpaceKind], default="euclidean")
    common.add_argument("--variant", help="metric variant for spd and grassmann")
    common.add_argument("--n", type=int, default=DEFAULT_N, help="sample size")
    common.add_argument("--seed", type=int, help="RNG seed (default: GEOKERNEL_SEED)")
    common.add_argument("--dim", type=int)
    common.add_argument("--k", type=int, help="grassmann subspace dimension")
    common.add_argument("--q-norm", type=float, help="exponent of the l_q norm")
    common.add_argument("--epsilon", type=float, help="neighbourhood radius for graphs")
    common.add_argument("--knn", type=int, help="neighbour count for graphs")
    common.add_argument("--q", type=float, action="append", dest="q_values",
                        help="kernel exponent, repeatable (default: 1 and 2)")
    common.add_argument("--lambda-grid", help="min:max:count")
    common.add_argument("--out", help="output file (directory for reproduce)")
    common.add_argument("--format", choices=("csv", "structured"), dest="output_format")
    common.add_argument("--log-level", help="console log level")

    parser = LabArgumentParser(
        prog="geo-kernel-lab",
        description="Positive-definiteness of geodesic exponential kernels on sampled spaces")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", metavar="command",
                                     parser_class=LabArgumentParser)
    commands.required = True

    spectrum = commands.add_parser("spectrum", parents=[common],
                                   help="Gram eigenspectrum at one bandwidth")
    spectrum.add_argument("--lambda", type=float, dest="lam", default=DEFAULT_LAMBDA)
    commands.add_parser("sweep", parents=[common], help="PD verdicts over a lambda grid")
    cnd = commands.add_parser("cnd", parents=[common],
                              help="CND verdict and Schoenberg crosscheck")
    cnd.add_argument("--matrix", help="whitespace-separated distance matrix file")
    metric = commands.add_parser("metric-check", parents=[common],
                                 help="metric axioms on a distance matrix")
    metric.add_argument("--matrix", help="whitespace-separated distance matrix file")
    metric.add_argument("--sqrt", action="store_true",
                        help="check the square-root metric instead")
    cat = commands.add_parser("cat-check", parents=[common],
                              help="CAT(kappa) test on a sampled triangle")
    cat.add_argument("--kappa", type=float, default=0.0)
    cat.add_argument("--samples-per-edge", type=int, default=DEFAULT_SAMPLES_PER_EDGE)
    commands.add_parser("reproduce", parents=[common], help="run the five reference panels")
    return parser


def space_from_args(args: argparse.Namespace) -> SpaceSpec:
    kind = SpaceKind(args.space)
    dim = args.dim
    if kind in DIMENSIONED_KINDS and dim is None:
        dim = DEFAULT_DIMS[kind]
    variant = args.variant or DEFAULT_VARIANTS.get(kind)
    q_norm = args.q_norm
    if kind is SpaceKind.LQ and q_norm is None:
        q_norm = DEFAULT_Q_NORM
    return SpaceSpec(kind, dim=dim, metric_variant=variant, q_norm=q_norm,
                     subspace_dim=args.k)


class CommandRunner(LabBase):
    """Executes one parsed command and prints its verdicts."""

    def __init__(self, args: argparse.Namespace, config: LabConfig) -> None:
        super().__init__(config)
        self.args = args
        self.seed = config.seed if args.seed is None else args.seed
        self.grid = (parse_lambda_grid(args.lambda_grid) if args.lambda_grid
                     else config.get_lambda_grid())
        self.q_values = args.q_values or [1.0, 2.0]

    def sample_distances(self) -> DistanceMatrix:
        matrix = getattr(self.args, "matrix", None)
        if matrix:
            logger.info("Loading distance matrix from %s", matrix)
            return load_distance_matrix(matrix)
        space = space_from_args(self.args)
        if self.args.n < 1:
            raise UsageError(f"--n must be at least 1, got {self.args.n}")
        points = build_point_set(space, self.args.n, self.seed,
                                 self.args.epsilon, self.args.knn)
        return pairwise_distances(points, workers=self.workers)

    def emit(self, document: Dict[str, Any], rows: Optional[List] = None) -> None:
        if not self.args.out:
            return
        if self.args.output_format == "csv":
            write_plot_data(rows or [], self.args.out)
        else:
            write_result_document(self._serialize_lab_data(document), self.args.out)
        print(f"wrote {self.args.out}")

    def spectrum(self) -> None:
        distances = self.sample_distances()
        reports = [gram_report(distances, KernelSpec(lam=self.args.lam, q=q))
                   for q in self.q_values]
        for report in reports:
            print(f"{report.kernel.name}: {report.describe()}")  # type: ignore[union-attr]
        self.emit({"command": "spectrum", "seed": self.seed, "reports": reports},
                  spectrum_rows(reports, distances.space))

    def sweep(self) -> None:
        distances = self.sample_distances()
        sweeps = [lambda_sweep(distances, q, self.grid, self.workers) for q in self.q_values]
        for sweep in sweeps:
            print(f"q={sweep.q:g}: {sweep.describe()}")
        rows = spectrum_rows([r for s in sweeps for r in s.reports], distances.space)
        self.emit({"command": "sweep", "seed": self.seed, "sweeps": sweeps}, rows)

    def cnd(self) -> None:
        distances = self.sample_distances()
        report = cnd_report(distances)
        crosscheck = schonberg_crosscheck(distances, self.grid, self.workers)
        print(report.describe())
        print(f"Schoenberg crosscheck {crosscheck.status.value}: {crosscheck.message}")
        self.emit({"command": "cnd", "seed": self.seed, "report": report,
                   "crosscheck": crosscheck})

    def metric_check(self) -> None:
        distances = self.sample_distances()
        if self.args.sqrt:
            distances = sqrt_distance_matrix(distances)
        report = check_metric_axioms(distances)
        label = "sqrt metric" if self.args.sqrt else "metric"
        print(f"{label}: {report.describe()}")
        self.emit({"command": "metric-check", "sqrt": self.args.sqrt, "report": report})

    def cat_check(self) -> None:
        space = space_from_args(self.args)
        vertices = build_point_set(space, 3, self.seed, self.args.epsilon, self.args.knn)
        report = cat_check(space, list(vertices.elements), self.args.kappa,
                           self.args.samples_per_edge)
        print(report.describe())
        self.emit({"command": "cat-check", "seed": self.seed, "report": report})

    def reproduce(self) -> None:
        runner = ExperimentRunner(self.config, self.workers)
        out_dir = self.args.out or self.config.get_output_dir()
        formats = [self.args.output_format] if self.args.output_format else ["csv", "structured"]
        for result in runner.reproduce(self.seed, self.grid):
            for (variant, q), sweep in zip(result.config.cells(), result.sweeps):
                print(f"{result.config.name} {variant or '-'} q={q:g}: {sweep.describe()}")
            for path in runner.write(result, out_dir, formats):
                print(f"wrote {path}")

    def run(self) -> None:
        handlers = {
            "spectrum": self.spectrum,
            "sweep": self.sweep,
            "cnd": self.cnd,
            "metric-check": self.metric_check,
            "cat-check": self.cat_check,
            "reproduce": self.reproduce,
        }
        handlers[self.args.command]()


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if args.output_format == "csv" and args.command not in CSV_COMMANDS:
        print(f"geo-kernel-lab: error: --format csv is not available for {args.command}",
              file=sys.stderr)
        return EXIT_USAGE

    try:
        config = LabConfig()
        if args.log_level:
            level = logging.getLevelName(args.log_level.upper())
            if not isinstance(level, int):
                raise UsageError(f"unknown log level {args.log_level!r}")
        else:
            level = config.get_log_level()
        if not LoggingConfig.setup(level, config.log_dir):
            logger.warning("Colored logging unavailable, using basic logging")
        logger.debug("geo-kernel-lab %s: %s", __version__, vars(args))
        CommandRunner(args, config).run()
    except UsageError as e:
        print(f"geo-kernel-lab: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except GeoKernelError as e:
        logger.error("Invalid input: %s", e)
        print(f"geo-kernel-lab: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as e:
        logger.error("I/O error: %s", e, exc_info=True)
        print(f"geo-kernel-lab: {e}", file=sys.stderr)
        return EXIT_IO
    except Exception as e:
        logger.error("Unexpected error: %s", e, exc_info=True)
        raise
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
