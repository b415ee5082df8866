"""
Metric-axiom scan of a finite distance matrix.

Checks symmetry, zero diagonal, nonnegativity, identity of
indiscernibles over distinct sample labels and the triangle
inequality over all n^3 ordered triples.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from geo_kernel_lab.common.DistanceMatrix import DistanceMatrix, check_square
from geo_kernel_lab.config.logging_config import LoggingConfig

logger = LoggingConfig.get_logger(__name__)

DEFAULT_TOLERANCE = 1e-9
MAX_LISTED = 20


@dataclass
class AxiomReport:
    """
    Violations found by ``check_metric_axioms``.

    Each list holds at most 20 examples; the counts are complete.

    Attributes:
        n (int): Sample size
        tolerance (float): Slack tolerance
        symmetry (list): (i, j, |D[i][j] - D[j][i]|)
        diagonal (list): (i, D[i][i]) with nonzero diagonal
        negative (list): (i, j, D[i][j]) below zero
        indiscernible (list): (i, j) with distinct labels at distance <= tol
        triangle (list): (i, j, k, slack) where
            slack = D[i][k] + D[k][j] - D[i][j] < -tol
        triangle_count (int): Number of violating ordered triples
        worst_triangle_slack (float): Minimum slack over all triples
    """

    n: int
    tolerance: float
    symmetry: List[Tuple[int, int, float]] = field(default_factory=list)
    diagonal: List[Tuple[int, float]] = field(default_factory=list)
    negative: List[Tuple[int, int, float]] = field(default_factory=list)
    indiscernible: List[Tuple[int, int]] = field(default_factory=list)
    triangle: List[Tuple[int, int, int, float]] = field(default_factory=list)
    triangle_count: int = 0
    worst_triangle_slack: float = 0.0

    @property
    def ok(self) -> bool:
        return not (self.symmetry or self.diagonal or self.negative
                    or self.indiscernible or self.triangle_count)

    def describe(self) -> str:
        if self.ok:
            return f"metric (no violation found at n={self.n})"
        parts = []
        for name, items in (("symmetry", self.symmetry), ("diagonal", self.diagonal),
                            ("nonnegativity", self.negative),
                            ("indiscernibles", self.indiscernible)):
            if items:
                parts.append(f"{name}: {len(items)}")
        if self.triangle_count:
            parts.append(f"triangle: {self.triangle_count} "
                         f"(worst slack {self.worst_triangle_slack:.3e})")
        return "NOT a metric (" + ", ".join(parts) + ")"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "tolerance": self.tolerance,
            "ok": self.ok,
            "symmetry": [list(v) for v in self.symmetry],
            "diagonal": [list(v) for v in self.diagonal],
            "negative": [list(v) for v in self.negative],
            "indiscernible": [list(v) for v in self.indiscernible],
            "triangle": [list(v) for v in self.triangle],
            "triangle_count": self.triangle_count,
            "worst_triangle_slack": self.worst_triangle_slack,
        }


def _pairs(mask: np.ndarray) -> List[Tuple[int, int]]:
    return [(int(i), int(j)) for i, j in np.argwhere(mask)[:MAX_LISTED]]


def check_metric_axioms(distances: Union[DistanceMatrix, np.ndarray],
                        tol: float = DEFAULT_TOLERANCE,
                        labels: Optional[Sequence[Any]] = None) -> AxiomReport:
    """
    Scan a square matrix for metric-axiom violations.

    Args:
        distances: Square matrix; not required to be a valid DistanceMatrix
        tol (float): Slack tolerance
        labels (list): Sample labels; pairs with different labels must
            be at positive distance. Every index is its own label when None.

    Returns:
        AxiomReport: All violations found
    """
    d = distances.entries if isinstance(distances, DistanceMatrix) \
        else check_square(distances, "distance matrix")
    n = d.shape[0]
    report = AxiomReport(n=n, tolerance=float(tol))

    asym = np.abs(d - d.T)
    report.symmetry = [(i, j, float(asym[i, j]))
                       for i, j in _pairs(np.triu(asym > tol, k=1))]
    report.diagonal = [(int(i), float(d[i, i]))
                       for i in np.flatnonzero(np.abs(np.diag(d)) > tol)[:MAX_LISTED]]
    report.negative = [(i, j, float(d[i, j])) for i, j in _pairs(d < -tol)]

    keys = np.arange(n) if labels is None else np.asarray(labels, dtype=object)
    distinct = keys[:, None] != keys[None, :]
    report.indiscernible = _pairs(np.triu(distinct & (d <= tol), k=1))

    worst = 0.0
    for k in range(n):
        slack = d[:, k][:, None] + d[k, :][None, :] - d
        bad = np.argwhere(slack < -tol)
        report.triangle_count += int(bad.shape[0])
        for i, j in bad[:max(0, MAX_LISTED - len(report.triangle))]:
            report.triangle.append((int(i), int(j), k, float(slack[i, j])))
        if n:
            worst = min(worst, float(slack.min()))
    report.worst_triangle_slack = worst
    logger.debug("Axiom scan n=%d: %s", n, report.describe())
    return report
