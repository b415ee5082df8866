"""
CAT Module

Sampled CAT(kappa) comparison and geodesic-property checks.

A geodesic triangle satisfies the CAT(kappa) condition when every point
x on an edge is no farther from the opposite vertex a than its
comparison point is from the comparison vertex:

    d(x, a) <= d_kappa(x', a')

Key Features:
- Evenly spaced interior samples on each edge, midpoints included
- Violations carry the worst slack so callers can judge magnitude
- The geodesic-property check accepts any interpolation and distance,
  so non-geodesic curves and non-geodesic metrics can be examined

Dependencies:
    - numpy: sampling positions
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np

from geo_kernel_lab.common.errors import ValidationError
from geo_kernel_lab.common.SpaceSpec import SpaceSpec
from geo_kernel_lab.config.logging_config import LoggingConfig
from geo_kernel_lab.manifolds.geodesics import geodesic_interpolate, point_distance
from geo_kernel_lab.metric_props.comparison import ComparisonTriangle, comparison_triangle

logger = LoggingConfig.get_logger(__name__)

SLACK_TOLERANCE = 1e-9
DEGENERATE_SIDE = 1e-15
DEFAULT_SAMPLES_PER_EDGE = 9
GEODESIC_TOLERANCE = 1e-8

# (start, end, opposite) vertex indices of the three edges
EDGES = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


class CatVerdict(str, Enum):
    SATISFIED = "SATISFIED"
    VIOLATED = "VIOLATED"


@dataclass
class CatSample:
    edge: int
    fraction: float
    slack: float


@dataclass
class CatReport:
    """
    Result of a sampled CAT(kappa) check on one triangle.

    Attributes:
        kappa (float): Model curvature
        sides (list): Side lengths (d(p, q), d(p, r), d(q, r))
        samples (list): One CatSample per sampled edge point
        verdict (CatVerdict): VIOLATED iff some slack < -1e-9
        worst_slack (float): Minimum slack
    """

    kappa: float
    sides: List[float]
    samples: List[CatSample] = field(default_factory=list)
    verdict: CatVerdict = CatVerdict.SATISFIED
    worst_slack: float = 0.0

    @property
    def violations(self) -> List[CatSample]:
        return [s for s in self.samples if s.slack < -SLACK_TOLERANCE]

    def describe(self) -> str:
        if self.verdict is CatVerdict.SATISFIED:
            return (f"CAT({self.kappa:g}) SATISFIED (no violation found over "
                    f"{len(self.samples)} samples)")
        return (f"CAT({self.kappa:g}) VIOLATED at {len(self.violations)} samples "
                f"(worst slack {self.worst_slack:.6e})")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kappa": self.kappa,
            "sides": list(self.sides),
            "samples": [vars(s).copy() for s in self.samples],
            "verdict": self.verdict.value,
            "worst_slack": self.worst_slack,
        }


def edge_fractions(samples_per_edge: int) -> List[float]:
    """Interior fractions k / (m + 1), k = 1..m."""
    m = int(samples_per_edge)
    if m < 1:
        raise ValidationError(f"samples_per_edge must be at least 1, got {m}")
    return [k / (m + 1) for k in range(1, m + 1)]


def cat_check(space: SpaceSpec, vertices: Sequence[Any], kappa: float,
              samples_per_edge: int = DEFAULT_SAMPLES_PER_EDGE) -> CatReport:
    """
    Compare a geodesic triangle of ``space`` with its M_kappa comparison triangle.

    Args:
        space (SpaceSpec): A space supporting geodesic interpolation
        vertices (list): The three vertices p, q, r
        kappa (float): Model curvature
        samples_per_edge (int): Interior sample points per edge

    Returns:
        CatReport: Slack d_kappa(x', a') - d(x, a) per sampled point

    Raises:
        DomainError: perimeter >= 2 D_kappa
        GeodesicNotUniqueError: antipodal sphere vertices
        UnsupportedOperationError: space without geodesic interpolation
    """
    if len(vertices) != 3:
        raise ValidationError(f"a triangle has 3 vertices, got {len(vertices)}")
    p, q, r = vertices
    sides = [point_distance(space, p, q), point_distance(space, p, r),
             point_distance(space, q, r)]
    fractions = edge_fractions(samples_per_edge)
    report = CatReport(kappa=float(kappa), sides=sides)

    if min(sides) <= DEGENERATE_SIDE:
        report.samples = [CatSample(edge, t, 0.0)
                          for edge in range(3) for t in fractions]
        return report

    model: ComparisonTriangle = comparison_triangle(*sides, kappa=kappa)
    for edge, (start, end, opposite) in enumerate(EDGES):
        for t in fractions:
            x = geodesic_interpolate(space, vertices[start], vertices[end], t)
            x_bar = model.point_on_edge(start, end, t)
            slack = (model.distance(x_bar, model.vertices[opposite])
                     - point_distance(space, x, vertices[opposite]))
            report.samples.append(CatSample(edge, t, float(slack)))

    report.worst_slack = min(s.slack for s in report.samples)
    if report.worst_slack < -SLACK_TOLERANCE:
        report.verdict = CatVerdict.VIOLATED
    logger.debug("CAT(%g) check on %s: %s", kappa, space.describe(), report.verdict.value)
    return report


@dataclass
class GeodesicReport:
    """
    Deviation of a curve from the geodesic identity d(g(s), g(t)) = |s - t| L.

    Attributes:
        length (float): L, the distance between the endpoints
        parameters (list): Sampled fractions, endpoints included
        max_deviation (float): Largest |d(g(s), g(t)) - |s - t| L|
        tolerance (float): 1e-8 L
        holds (bool): max_deviation <= tolerance
    """

    length: float
    parameters: List[float]
    max_deviation: float
    tolerance: float
    holds: bool

    def to_dict(self) -> Dict[str, Any]:
        return dict(vars(self))


def check_geodesic_property(space: SpaceSpec, x: Any, y: Any, samples: int = 9,
                            interpolate: Optional[Callable[[Any, Any, float], Any]] = None,
                            distance: Optional[Callable[[Any, Any], float]] = None
                            ) -> GeodesicReport:
    """
    Test d(g(sL), g(tL)) = |s - t| L over all pairs of sampled fractions.

    Args:
        space (SpaceSpec): Space of x and y
        x: Start point
        y: End point
        samples (int): Number of evenly spaced fractions in [0, 1], at least 2
        interpolate: Curve g(x, y, t); geodesic interpolation of ``space``
            when None
        distance: Metric d(u, v); the distance of ``space`` when None

    Returns:
        GeodesicReport: Maximum deviation and whether it is within 1e-8 L
    """
    if int(samples) < 2:
        raise ValidationError(f"need at least 2 samples, got {samples}")
    if interpolate is None:
        def interpolate(u: Any, v: Any, t: float) -> Any:
            return geodesic_interpolate(space, u, v, t)
    if distance is None:
        def distance(u: Any, v: Any) -> float:
            return point_distance(space, u, v)

    parameters = [float(t) for t in np.linspace(0.0, 1.0, int(samples))]
    points = [interpolate(x, y, t) for t in parameters]
    length = float(distance(x, y))
    worst = 0.0
    for i, s in enumerate(parameters):
        for j in range(i, len(parameters)):
            t = parameters[j]
            worst = max(worst, abs(distance(points[i], points[j]) - abs(s - t) * length))
    tolerance = GEODESIC_TOLERANCE * length
    return GeodesicReport(length, parameters, worst, tolerance, worst <= tolerance)
