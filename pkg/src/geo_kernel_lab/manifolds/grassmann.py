"""
Grassmannian distances through principal angles.

A point of Gr(k, n) is represented by an n x k frame U with U^T U = I;
any frame U R with R orthogonal k x k represents the same subspace.
"""

import numpy as np
from scipy import linalg

from geo_kernel_lab.common.errors import ValidationError
from geo_kernel_lab.common.SpaceSpec import GrassmannMetric

FRAME_TOLERANCE = 1e-9


def validate_frame(frame: np.ndarray, tol: float = FRAME_TOLERANCE) -> np.ndarray:
    """
    Check that ``frame`` has orthonormal columns.

    Raises:
        ValidationError: frame is not 2-D, has more columns than rows or
            U^T U deviates from the identity by more than ``tol``
    """
    u = np.asarray(frame, dtype=float)
    if u.ndim == 1:
        u = u.reshape(-1, 1)
    if u.ndim != 2 or u.shape[1] > u.shape[0]:
        raise ValidationError(
            f"a Grassmann frame must be n x k with k <= n, got shape {u.shape}")
    deviation = float(np.max(np.abs(u.T @ u - np.eye(u.shape[1]))))
    if deviation > tol:
        raise ValidationError(
            f"frame columns are not orthonormal: max |U^T U - I| = {deviation:.3e}")
    return u


def principal_angles(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Principal angles in ascending order, arccos of the clamped singular values of U^T V."""
    u, v = validate_frame(u), validate_frame(v)
    if u.shape != v.shape:
        raise ValidationError(
            f"frames must have equal shapes, got {u.shape} and {v.shape}")
    sigma = linalg.svd(u.T @ v, compute_uv=False)
    return np.arccos(np.clip(sigma, 0.0, 1.0))


def grassmann_distance(u: np.ndarray, v: np.ndarray, variant: str) -> float:
    """
    Distance between the column spans of two frames.

    Args:
        u (np.ndarray): n x k orthonormal frame
        v (np.ndarray): n x k orthonormal frame
        variant (str): ``intrinsic`` for the 2-norm of the principal
            angles, ``chordal`` for sqrt(sum sin^2) of the angles

    Raises:
        ValidationError: non-orthonormal frames or unknown variant
    """
    try:
        metric = GrassmannMetric(variant)
    except ValueError:
        raise ValidationError(
            f"unknown grassmann metric variant {variant!r}") from None
    if np.array_equal(np.asarray(u), np.asarray(v)):
        validate_frame(u)
        return 0.0
    theta = principal_angles(u, v)
    if metric is GrassmannMetric.CHORDAL:
        return float(np.sqrt(np.sum(np.sin(theta) ** 2)))
    return float(np.linalg.norm(theta))
