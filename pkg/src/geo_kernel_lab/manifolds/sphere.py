"""
Sphere and Real Projective Space Module

Points of S^n and P^n(R) are unit vectors of R^(n+1); a projective point
is represented by either of its two unit vectors.

Key Features:
- Intrinsic great-circle distance arccos<x, y>
- Projective distance arccos|<x, y>|, invariant under sign flips
- Spherical linear interpolation along the minimizing great circle

Dependencies:
    - numpy: vector arithmetic
"""

import numpy as np

from geo_kernel_lab.common.errors import GeodesicNotUniqueError, ValidationError
from geo_kernel_lab.manifolds.vector import as_vector_pair

UNIT_TOLERANCE = 1e-9
ANTIPODAL_TOLERANCE = 1e-12


def validate_unit_vector(x: np.ndarray, tol: float = UNIT_TOLERANCE) -> np.ndarray:
    """
    Check that ``x`` is a unit vector.

    Raises:
        ValidationError: naming the offending norm
    """
    x = np.asarray(x, dtype=float).ravel()
    norm = float(np.linalg.norm(x))
    if abs(norm - 1.0) > tol:
        raise ValidationError(
            f"expected a unit vector, got norm {norm:.12g}")
    return x


def _clamped_dot(x: np.ndarray, y: np.ndarray) -> float:
    return float(np.clip(np.dot(x, y), -1.0, 1.0))


def sphere_distance(x: np.ndarray, y: np.ndarray) -> float:
    """Great-circle distance in [0, pi]."""
    x, y = as_vector_pair(x, y)
    x, y = validate_unit_vector(x), validate_unit_vector(y)
    if np.array_equal(x, y):
        return 0.0
    return float(np.arccos(_clamped_dot(x, y)))


def projective_distance(x: np.ndarray, y: np.ndarray) -> float:
    """Distance between the lines spanned by ``x`` and ``y``, in [0, pi/2]."""
    x, y = as_vector_pair(x, y)
    x, y = validate_unit_vector(x), validate_unit_vector(y)
    if np.array_equal(x, y) or np.array_equal(x, -y):
        return 0.0
    return float(np.arccos(abs(_clamped_dot(x, y))))


def sphere_interpolate(x: np.ndarray, y: np.ndarray, t: float) -> np.ndarray:
    """
    Point at arc-length fraction ``t`` on the great circle from x to y.

    Raises:
        GeodesicNotUniqueError: x and y are antipodal
    """
    x, y = as_vector_pair(x, y)
    x, y = validate_unit_vector(x), validate_unit_vector(y)
    cosine = _clamped_dot(x, y)
    if cosine <= -1.0 + ANTIPODAL_TOLERANCE:
        raise GeodesicNotUniqueError(
            "geodesic not unique: sphere endpoints are antipodal")
    if t == 0.0 or np.array_equal(x, y):
        return x.copy()
    if t == 1.0:
        return y.copy()
    length = float(np.arccos(cosine))
    if length == 0.0:
        return x.copy()
    sine = np.sin(length)
    return (np.sin((1.0 - t) * length) * x + np.sin(t * length) * y) / sine
