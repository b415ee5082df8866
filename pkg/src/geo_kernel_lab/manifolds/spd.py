"""
SPD Matrix Module

Distances and geodesics on the cone of symmetric positive definite
matrices under four metrics:
1. Frobenius: the flat metric inherited from the ambient matrix space
2. Log-Euclidean: Frobenius distance between matrix logarithms
3. Affine-invariant: sqrt(sum ln^2 of the eigenvalues of A^-1 B)
4. Fisher: the affine-invariant distance scaled by 1/sqrt(2), the
   Fisher-Rao distance between zero-mean normals with covariances A, B

Key Features:
- Matrix functions through symmetric eigendecomposition
- Generalized symmetric eigenproblem for the affine-invariant metric,
  so A^-1 B is never formed explicitly

Dependencies:
    - numpy: matrix arithmetic
    - scipy.linalg: eigh / eigvalsh for symmetric (generalized) eigenproblems
"""

from typing import Callable

import numpy as np
from scipy import linalg

from geo_kernel_lab.common.errors import ValidationError
from geo_kernel_lab.common.SpaceSpec import SpdMetric

SYMMETRY_TOLERANCE = 1e-10
EIGENVALUE_FLOOR = 1e-14
FISHER_SCALE = 1.0 / np.sqrt(2.0)


def validate_spd(matrix: np.ndarray) -> np.ndarray:
    """
    Check that ``matrix`` is symmetric positive definite.

    Returns:
        np.ndarray: The matrix as a float array, exactly symmetrized

    Raises:
        ValidationError: not square, not symmetric or minimum eigenvalue <= 0
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"spd input must be square, got shape {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a))))
    if float(np.max(np.abs(a - a.T))) > SYMMETRY_TOLERANCE * scale:
        raise ValidationError("spd input is not symmetric")
    a = 0.5 * (a + a.T)
    min_eig = float(linalg.eigvalsh(a)[0])
    if not min_eig > 0.0:
        raise ValidationError(
            f"matrix is not positive definite: minimum eigenvalue {min_eig:.6e}")
    return a


def _spectral_function(a: np.ndarray,
                       func: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    w, v = linalg.eigh(a)
    out = (v * func(w)) @ v.T
    return 0.5 * (out + out.T)


def spd_logm(a: np.ndarray) -> np.ndarray:
    """Matrix logarithm with eigenvalues clamped below at 1e-14."""
    return _spectral_function(a, lambda w: np.log(np.maximum(w, EIGENVALUE_FLOOR)))


def sym_expm(a: np.ndarray) -> np.ndarray:
    """Matrix exponential of a symmetric matrix."""
    return _spectral_function(a, np.exp)


def spd_power(a: np.ndarray, power: float) -> np.ndarray:
    return _spectral_function(a, lambda w: np.maximum(w, EIGENVALUE_FLOOR) ** power)


def _metric(variant: str) -> SpdMetric:
    try:
        return SpdMetric(variant)
    except ValueError:
        raise ValidationError(f"unknown spd metric variant {variant!r}") from None


def _check_shapes(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise ValidationError(
            f"spd matrices must have equal sizes, got {a.shape} and {b.shape}")


def affine_invariant_distance(a: np.ndarray, b: np.ndarray) -> float:
    # generalized eigenvalues of B v = w A v are the eigenvalues of A^-1 B
    w = linalg.eigvalsh(b, a)
    return float(np.sqrt(np.sum(np.log(np.maximum(w, EIGENVALUE_FLOOR)) ** 2)))


def spd_distance(a: np.ndarray, b: np.ndarray, variant: str) -> float:
    """
    Distance between two SPD matrices under one of the four metrics.

    Args:
        a (np.ndarray): SPD matrix
        b (np.ndarray): SPD matrix of the same size
        variant (str): frobenius, log_euclidean, affine_invariant or fisher

    Returns:
        float: The distance, exactly 0 for identical inputs

    Raises:
        ValidationError: non-SPD input, size mismatch or unknown variant
    """
    metric = _metric(variant)
    a, b = validate_spd(a), validate_spd(b)
    _check_shapes(a, b)
    if np.array_equal(a, b):
        return 0.0

    if metric is SpdMetric.FROBENIUS:
        return float(np.linalg.norm(a - b, "fro"))
    if metric is SpdMetric.LOG_EUCLIDEAN:
        return float(np.linalg.norm(spd_logm(a) - spd_logm(b), "fro"))
    distance = affine_invariant_distance(a, b)
    if metric is SpdMetric.FISHER:
        return float(FISHER_SCALE * distance)
    return distance


def spd_interpolate(a: np.ndarray, b: np.ndarray, t: float,
                    variant: str) -> np.ndarray:
    """
    Point at arc-length fraction ``t`` on the geodesic from A to B.

    The Fisher metric is a constant multiple of the affine-invariant one,
    so both share the curve A^(1/2) (A^(-1/2) B A^(-1/2))^t A^(1/2).
    """
    metric = _metric(variant)
    a, b = validate_spd(a), validate_spd(b)
    _check_shapes(a, b)
    if t == 0.0:
        return a.copy()
    if t == 1.0:
        return b.copy()

    if metric is SpdMetric.FROBENIUS:
        return (1.0 - t) * a + t * b
    if metric is SpdMetric.LOG_EUCLIDEAN:
        return sym_expm((1.0 - t) * spd_logm(a) + t * spd_logm(b))
    root = spd_power(a, 0.5)
    inv_root = spd_power(a, -0.5)
    inner = inv_root @ b @ inv_root
    out = root @ spd_power(0.5 * (inner + inner.T), t) @ root
    return 0.5 * (out + out.T)
