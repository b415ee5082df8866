"""
Sweeps Module

Bandwidth sweeps of exponential kernels and the finite-sample
Schoenberg crosscheck.

Key Features:
- Log-spaced lambda grids, 20 points on [1e-2, 1e3] by default
- Sweeps over grid points run on a thread pool when asked to; results
  are ordered by grid position regardless of scheduling
- A CND violation that the grid misses is searched for along the
  violating direction before the crosscheck calls anything a disagreement

Dependencies:
    - numpy: arrays
    - scipy.optimize: bounded scalar search along the CND witness direction
"""

from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import optimize

from geo_kernel_lab.common.DistanceMatrix import DistanceMatrix, as_distance_matrix
from geo_kernel_lab.common.errors import ValidationError
from geo_kernel_lab.config.lab_config import make_lambda_grid
from geo_kernel_lab.config.logging_config import LoggingConfig
from geo_kernel_lab.kernels.exponential import KernelSpec, gram_matrix
from geo_kernel_lab.spectral.eigen import (
    RELATIVE_TOLERANCE, cnd_verdict, deflated_distance_spectrum, spectrum_report)
from geo_kernel_lab.spectral.SpectrumReport import (
    CrosscheckStatus, LambdaSweep, SchonbergReport, SpectrumReport, SweepVerdict, Verdict)

logger = LoggingConfig.get_logger(__name__)

DEFAULT_LAMBDA_MIN = 1e-2
DEFAULT_LAMBDA_MAX = 1e3
DEFAULT_LAMBDA_COUNT = 20
PROBE_DIRECTIONS = 5
PROBE_POINTS = 241


def default_lambda_grid() -> List[float]:
    return make_lambda_grid(DEFAULT_LAMBDA_MIN, DEFAULT_LAMBDA_MAX, DEFAULT_LAMBDA_COUNT)


def parse_lambda_grid(text: str) -> List[float]:
    """
    Parse ``min:max:count`` into a log-spaced grid.

    Raises:
        ValidationError: malformed text or invalid bounds
    """
    parts = str(text).split(":")
    if len(parts) != 3:
        raise ValidationError(
            f"lambda grid must look like min:max:count, got {text!r}")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ValidationError(
            f"lambda grid must look like min:max:count, got {text!r}") from None
    return make_lambda_grid(lo, hi, count)


def validate_grid(grid: Sequence[float]) -> List[float]:
    values = [float(v) for v in grid]
    if not values:
        raise ValidationError("lambda grid is empty")
    if any(not v > 0.0 or not np.isfinite(v) for v in values):
        raise ValidationError("lambda grid values must be positive and finite")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValidationError("lambda grid must be strictly increasing")
    return values


def lambda_sweep(distances: DistanceMatrix, q: float,
                 grid: Optional[Sequence[float]] = None,
                 workers: int = 1) -> LambdaSweep:
    """
    PD verdict of exp(-lambda D^q) at every grid point.

    Args:
        distances (DistanceMatrix): The sample's distances
        q (float): Kernel exponent
        grid (list): Bandwidths, the default grid when None
        workers (int): Threads evaluating grid points concurrently

    Returns:
        LambdaSweep: PD_FOR_ALL_TESTED iff every Gram matrix passes
    """
    d = as_distance_matrix(distances)
    values = validate_grid(default_lambda_grid() if grid is None else grid)

    def evaluate(lam: float) -> SpectrumReport:
        return spectrum_report(gram_matrix(d, KernelSpec(lam=lam, q=q)))

    if workers > 1 and len(values) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(evaluate, values))
    else:
        reports = [evaluate(lam) for lam in values]

    failing = [lam for lam, report in zip(values, reports) if not report.passed]
    sweep = LambdaSweep(
        grid=values,
        q=float(q),
        min_eigenvalues=[r.min_eigenvalue for r in reports],
        tolerances=[r.tolerance for r in reports],
        verdict=SweepVerdict.FAILS_AT if failing else SweepVerdict.PD_FOR_ALL_TESTED,
        failing_lambdas=failing,
        n=d.n,
        space=d.space,
        reports=reports,
    )
    logger.debug("Sweep q=%g over %d lambdas on n=%d: %s",
                 q, len(values), d.n, sweep.verdict.value)
    return sweep


def _probe_direction(d: np.ndarray, c: np.ndarray, lo: float,
                     hi: float) -> Tuple[float, float]:
    """Minimize c^T exp(-lambda D) c over log10(lambda) in [lo, hi]."""
    def quadratic_form(log_lam: float) -> float:
        return float(c @ np.exp(-(10.0 ** log_lam) * d) @ c)

    coarse = np.linspace(lo, hi, PROBE_POINTS)
    values = [quadratic_form(u) for u in coarse]
    best = int(np.argmin(values))
    left, right = coarse[max(best - 1, 0)], coarse[min(best + 1, len(coarse) - 1)]
    refined = optimize.minimize_scalar(quadratic_form, bounds=(left, right),
                                       method="bounded")
    if refined.success and refined.fun < values[best]:
        return float(10.0 ** refined.x), float(refined.fun)
    return float(10.0 ** coarse[best]), float(values[best])


def schonberg_crosscheck(distances: DistanceMatrix,
                         grid: Optional[Sequence[float]] = None,
                         workers: int = 1) -> SchonbergReport:
    """
    Compare the CND verdict of D with the q = 1 lambda-sweep.

    CND with a passing sweep, or NOT_CND with a failing sweep, agree.
    CND with a failing sweep disagrees. NOT_CND with a passing sweep
    is resolved by searching bandwidths along the most violating
    zero-sum directions: c^T K c bounds the minimum Gram eigenvalue
    from above, so a value below the PD tolerance certifies a non-PD
    Gram matrix at that bandwidth. Otherwise the violation is too weak
    to surface at the PD tolerance and the report is UNRESOLVED.
    """
    d = as_distance_matrix(distances)
    verdict, witness = cnd_verdict(d)
    sweep = lambda_sweep(d, 1.0, grid, workers)

    if verdict is Verdict.CND and sweep.passed:
        return SchonbergReport(CrosscheckStatus.AGREE, verdict, witness, sweep,
                               message=f"CND and PD for all tested λ (n={d.n})")
    if verdict is Verdict.NOT_CND and not sweep.passed:
        return SchonbergReport(CrosscheckStatus.AGREE, verdict, witness, sweep,
                               message=f"NOT CND and {sweep.describe()}")
    if verdict is Verdict.CND:
        logger.warning("Schoenberg crosscheck disagrees: CND but %s", sweep.describe())
        return SchonbergReport(CrosscheckStatus.DISAGREE, verdict, witness, sweep,
                               message=f"CND but {sweep.describe()}")

    w, vectors = deflated_distance_spectrum(d)
    tol = RELATIVE_TOLERANCE * d.n
    lo = float(np.log10(sweep.grid[0])) - 4.0
    hi = float(np.log10(sweep.grid[-1])) + 1.0
    best_lam, best_value = sweep.grid[0], 0.0
    for index in range(min(PROBE_DIRECTIONS, int(np.sum(w < 0.0)))):
        lam, value = _probe_direction(d.entries, vectors[:, index], lo, hi)
        if value < best_value:
            best_lam, best_value = lam, value
    if best_value < -tol:
        return SchonbergReport(
            CrosscheckStatus.AGREE, verdict, witness, sweep, best_lam, best_value,
            message=(f"NOT CND; grid passed but λ={best_lam:.6g} gives "
                     f"c^T K c={best_value:.6e} along the CND witness"))
    return SchonbergReport(
        CrosscheckStatus.UNRESOLVED, verdict, witness, sweep, best_lam, best_value,
        message=(f"NOT CND (witness {witness:.3e}) but no Gram violation "
                 f"reaches the PD tolerance {tol:.3e}"))
