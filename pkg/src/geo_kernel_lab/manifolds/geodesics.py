"""
Geodesics Module

Dispatch of point distances and geodesic interpolation over the space
kinds described by ``SpaceSpec``.

Dependencies:
    - numpy: point arithmetic
"""

from typing import Any

import numpy as np

from geo_kernel_lab.common.errors import DomainError, UnsupportedOperationError
from geo_kernel_lab.common.SpaceSpec import SpaceKind, SpaceSpec
from geo_kernel_lab.manifolds.grassmann import grassmann_distance
from geo_kernel_lab.manifolds.hyperbolic import hyperbolic_distance, hyperbolic_interpolate
from geo_kernel_lab.manifolds.normal import normal_fisher_distance
from geo_kernel_lab.manifolds.spd import spd_distance, spd_interpolate
from geo_kernel_lab.manifolds.sphere import projective_distance, sphere_distance, sphere_interpolate
from geo_kernel_lab.manifolds.strings import edit_distance
from geo_kernel_lab.manifolds.vector import as_vector_pair, euclidean_distance, lq_distance

INTERPOLABLE_KINDS = frozenset({
    SpaceKind.EUCLIDEAN, SpaceKind.SPHERE, SpaceKind.HYPERBOLIC, SpaceKind.SPD,
})


def point_distance(space: SpaceSpec, x: Any, y: Any) -> float:
    """
    Distance between two elements of ``space``.

    Graph and tree vertices carry no geometry of their own; their
    distances come from ``graph_shortest_paths`` on the whole graph.

    Raises:
        UnsupportedOperationError: kind graph or tree
    """
    kind = space.kind
    if kind is SpaceKind.EUCLIDEAN:
        return euclidean_distance(x, y)
    if kind is SpaceKind.LQ:
        return lq_distance(x, y, space.q_norm)  # type: ignore[arg-type]
    if kind is SpaceKind.SPHERE:
        return sphere_distance(x, y)
    if kind is SpaceKind.PROJECTIVE:
        return projective_distance(x, y)
    if kind is SpaceKind.HYPERBOLIC:
        return hyperbolic_distance(x, y)
    if kind is SpaceKind.SPD:
        return spd_distance(x, y, space.metric_variant)  # type: ignore[arg-type]
    if kind is SpaceKind.GRASSMANN:
        return grassmann_distance(x, y, space.metric_variant)  # type: ignore[arg-type]
    if kind is SpaceKind.NORMAL:
        return normal_fisher_distance(x, y)
    if kind is SpaceKind.STRING:
        return float(edit_distance(x, y))
    raise UnsupportedOperationError(
        f"point_distance is not defined for {kind.value} vertices; "
        f"use graph_shortest_paths on the graph")


def geodesic_interpolate(space: SpaceSpec, x: Any, y: Any, t: float) -> Any:
    """
    Point at arc-length fraction ``t`` of the minimizing geodesic from x to y.

    Args:
        space (SpaceSpec): euclidean, sphere, hyperbolic or spd
        x: Start point
        y: End point
        t (float): Fraction in [0, 1]

    Returns:
        The point gamma(t L) with gamma(0) = x and gamma(L) = y

    Raises:
        DomainError: t outside [0, 1]
        GeodesicNotUniqueError: antipodal sphere endpoints
        UnsupportedOperationError: any other space kind
    """
    if space.kind not in INTERPOLABLE_KINDS:
        raise UnsupportedOperationError(
            f"geodesic_interpolate is not supported for {space.describe()}")
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"geodesic parameter t must lie in [0, 1], got {t}")

    if space.kind is SpaceKind.EUCLIDEAN:
        x, y = as_vector_pair(x, y)
        if t == 0.0:
            return x.copy()
        if t == 1.0:
            return y.copy()
        return (1.0 - t) * x + t * y
    if space.kind is SpaceKind.SPHERE:
        return sphere_interpolate(x, y, t)
    if space.kind is SpaceKind.HYPERBOLIC:
        return hyperbolic_interpolate(x, y, t)
    return spd_interpolate(np.asarray(x), np.asarray(y), t,
                           space.metric_variant)  # type: ignore[arg-type]
