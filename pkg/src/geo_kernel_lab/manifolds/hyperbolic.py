"""
Hyperbolic Space Module

Points of H^n live on the upper sheet of the hyperboloid
<x, x>_M = -1, x_0 > 0, in R^(n+1) with the Minkowski form
<x, y>_M = -x_0 y_0 + sum_i x_i y_i.

Dependencies:
    - numpy: vector arithmetic
"""

import numpy as np

from geo_kernel_lab.common.errors import ValidationError
from geo_kernel_lab.manifolds.vector import as_vector_pair

HYPERBOLOID_TOLERANCE = 1e-9


def minkowski_inner(x: np.ndarray, y: np.ndarray) -> float:
    x, y = as_vector_pair(x, y)
    return float(-x[0] * y[0] + np.dot(x[1:], y[1:]))


def validate_hyperboloid_point(x: np.ndarray,
                               tol: float = HYPERBOLOID_TOLERANCE) -> np.ndarray:
    """
    Check that ``x`` lies on the upper sheet of the hyperboloid.

    The round-off of <x, x>_M grows like eps * x_0^2, so the tolerance is
    relative to x_0^2 once x_0 exceeds 1.

    Raises:
        ValidationError: Minkowski norm off -1 or x_0 <= 0
    """
    x = np.asarray(x, dtype=float).ravel()
    if x.size < 2:
        raise ValidationError(
            f"hyperboloid points need at least 2 coordinates, got {x.size}")
    norm = minkowski_inner(x, x)
    if abs(norm + 1.0) > tol * max(1.0, float(x[0]) ** 2) or not x[0] > 0.0:
        raise ValidationError(
            f"point is off the hyperboloid: <x,x>_M = {norm:.12g}, "
            f"x_0 = {x[0]:.6g}")
    return x


def hyperbolic_distance(x: np.ndarray, y: np.ndarray) -> float:
    """Geodesic distance arcosh(max(1, -<x, y>_M))."""
    x, y = as_vector_pair(x, y)
    x, y = validate_hyperboloid_point(x), validate_hyperboloid_point(y)
    if np.array_equal(x, y):
        return 0.0
    return float(np.arccosh(max(1.0, -minkowski_inner(x, y))))


def hyperbolic_exp_at_origin(tangent: np.ndarray) -> np.ndarray:
    """
    Exponential map at the base point o = (1, 0, ..., 0).

    Args:
        tangent: spatial tangent vector v in R^n

    Returns:
        (cosh|v|, sinh|v| v/|v|), with x_0 recomputed from the spatial
        part so the point sits on the hyperboloid to rounding
    """
    v = np.asarray(tangent, dtype=float).ravel()
    radius = float(np.linalg.norm(v))
    spatial = np.zeros_like(v) if radius == 0.0 else np.sinh(radius) * v / radius
    return np.concatenate(([np.sqrt(1.0 + np.dot(spatial, spatial))], spatial))


def hyperbolic_interpolate(x: np.ndarray, y: np.ndarray, t: float) -> np.ndarray:
    """Point at arc-length fraction ``t`` on the geodesic from x to y."""
    x, y = as_vector_pair(x, y)
    x, y = validate_hyperboloid_point(x), validate_hyperboloid_point(y)
    if t == 0.0 or np.array_equal(x, y):
        return x.copy()
    if t == 1.0:
        return y.copy()
    length = float(np.arccosh(max(1.0, -minkowski_inner(x, y))))
    if length == 0.0:
        return x.copy()
    return ((np.sinh((1.0 - t) * length) * x + np.sinh(t * length) * y)
            / np.sinh(length))
