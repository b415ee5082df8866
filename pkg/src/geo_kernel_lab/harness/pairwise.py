"""
Pairwise distance matrices of point sets.

Rows are computed independently (vectorized where the space has a
closed form over arrays) and may run on a thread pool; the upper
triangle is mirrored so the result is exactly symmetric.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Callable, List, Optional

import numpy as np

from geo_kernel_lab.common.DistanceMatrix import DistanceMatrix
from geo_kernel_lab.common.PointSet import PointSet
from geo_kernel_lab.common.SpaceSpec import SpaceKind, SpaceSpec
from geo_kernel_lab.config.logging_config import LoggingConfig
from geo_kernel_lab.manifolds.geodesics import point_distance
from geo_kernel_lab.manifolds.graphs import graph_shortest_paths

logger = LoggingConfig.get_logger(__name__)

RowFunction = Callable[[np.ndarray, np.ndarray], np.ndarray]


def _sphere_row(x: np.ndarray, rest: np.ndarray) -> np.ndarray:
    return np.arccos(np.clip(rest @ x, -1.0, 1.0))


def _projective_row(x: np.ndarray, rest: np.ndarray) -> np.ndarray:
    return np.arccos(np.abs(np.clip(rest @ x, -1.0, 1.0)))


def _hyperbolic_row(x: np.ndarray, rest: np.ndarray) -> np.ndarray:
    inner = -rest[:, 0] * x[0] + rest[:, 1:] @ x[1:]
    return np.arccosh(np.maximum(1.0, -inner))


def _normal_row(x: np.ndarray, rest: np.ndarray) -> np.ndarray:
    mu, sigma = rest[:, 0], rest[:, 1]
    argument = 1.0 + ((x[0] - mu) ** 2 / 2.0 + (x[1] - sigma) ** 2) / (2.0 * x[1] * sigma)
    return np.sqrt(2.0) * np.arccosh(np.maximum(1.0, argument))


def _row_function(space: SpaceSpec) -> Optional[RowFunction]:
    kind = space.kind
    if kind is SpaceKind.EUCLIDEAN:
        return lambda x, rest: np.linalg.norm(rest - x, axis=1)
    if kind is SpaceKind.LQ:
        q = space.q_norm
        return lambda x, rest: np.sum(np.abs(rest - x) ** q, axis=1) ** (1.0 / q)
    if kind is SpaceKind.SPHERE:
        return _sphere_row
    if kind is SpaceKind.PROJECTIVE:
        return _projective_row
    if kind is SpaceKind.HYPERBOLIC:
        return _hyperbolic_row
    if kind is SpaceKind.NORMAL:
        return _normal_row
    return None


def pairwise_distances(points: PointSet, variant: Optional[str] = None,
                       workers: int = 1) -> DistanceMatrix:
    """
    Distance matrix of a point set.

    Args:
        points (PointSet): The sample
        variant (str): Metric variant overriding the one of ``points.space``
            (spd and grassmann only)
        workers (int): Threads computing rows concurrently

    Returns:
        DistanceMatrix: D[i][j] = distance between elements i and j
    """
    space = points.space
    if variant is not None and variant != space.metric_variant:
        space = replace(space, metric_variant=variant)

    if space.kind in (SpaceKind.GRAPH, SpaceKind.TREE):
        full = graph_shortest_paths(points.graph, space.kind)  # type: ignore[arg-type]
        index = np.asarray(points.elements, dtype=int)
        return DistanceMatrix(full.entries[np.ix_(index, index)], space)

    n = points.n
    row_function = _row_function(space)
    stacked = np.array([np.asarray(e, dtype=float) for e in points.elements]) \
        if row_function is not None else None

    def row(i: int) -> np.ndarray:
        if i == n - 1:
            return np.zeros(0)
        if row_function is not None:
            return row_function(stacked[i], stacked[i + 1:])  # type: ignore[index]
        return np.array([point_distance(space, points[i], points[j])
                         for j in range(i + 1, n)])

    if workers > 1 and n > 2:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows: List[np.ndarray] = list(pool.map(row, range(n)))
    else:
        rows = [row(i) for i in range(n)]

    entries = np.zeros((n, n))
    for i, values in enumerate(rows):
        entries[i, i + 1:] = values
    entries = entries + entries.T
    logger.debug("Pairwise distances for %d points of %s", n, space.describe())
    return DistanceMatrix(entries, space)
