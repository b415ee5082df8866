"""
Kernels derived from conditionally negative definite distances.

Key Features:
- Base-point centered kernel, PSD whenever the distance is CND
- Square-root metric, a metric whenever the distance is CND
- Explicit Euclidean coordinates realizing the square-root metric
"""

from typing import Optional, Union

import numpy as np
from scipy import linalg

from geo_kernel_lab.common.DistanceMatrix import DistanceMatrix, as_distance_matrix
from geo_kernel_lab.common.errors import DomainError, ValidationError
from geo_kernel_lab.config.logging_config import LoggingConfig

logger = LoggingConfig.get_logger(__name__)

DistanceLike = Union[DistanceMatrix, np.ndarray]


def centered_cnd_kernel(distances: DistanceLike, base: int) -> np.ndarray:
    """
    K[i][j] = (D[i][base] + D[base][j] - D[i][j]) / 2.

    Row and column ``base`` vanish and K[i][i] = D[i][base]. The
    matrix is positive semidefinite when D is conditionally negative
    definite.

    Raises:
        ValidationError: base index out of range
    """
    d = as_distance_matrix(distances).entries
    n = d.shape[0]
    if not 0 <= int(base) < n:
        raise ValidationError(f"base index {base} outside 0..{n - 1}")
    column = d[:, base]
    return 0.5 * (column[:, None] + column[None, :] - d)


def sqrt_distance_matrix(distances: DistanceLike) -> DistanceMatrix:
    d = as_distance_matrix(distances)
    return DistanceMatrix(np.sqrt(d.entries), d.space)


def sqrt_metric_embedding(distances: DistanceLike,
                          tol: Optional[float] = None) -> np.ndarray:
    """
    Coordinates y_i with |y_i - y_j| = sqrt(D[i][j]).

    Classical scaling of B = -J D J / 2, J the centering matrix. Such
    coordinates exist exactly when D is conditionally negative definite.

    Args:
        distances: Distance matrix
        tol (float): Eigenvalue tolerance, 1e-8 n max|D| by default

    Returns:
        np.ndarray: n x r coordinates, r the number of eigenvalues above tol

    Raises:
        DomainError: B has an eigenvalue below -tol (D is not CND)
    """
    d = as_distance_matrix(distances).entries
    n = d.shape[0]
    if tol is None:
        tol = 1e-8 * n * max(float(np.max(np.abs(d))), np.finfo(float).tiny)
    centered = d - d.mean(axis=0)[None, :] - d.mean(axis=1)[:, None] + d.mean()
    b = -0.5 * centered
    w, v = linalg.eigh(0.5 * (b + b.T))
    if w.size and w[0] < -tol:
        raise DomainError(
            f"distance matrix is not conditionally negative definite: "
            f"eigenvalue {w[0]:.3e} below -{tol:.3e}")
    keep = w > tol
    logger.debug("Square-root metric embedding of %d points in dimension %d",
                 n, int(np.sum(keep)))
    return v[:, keep] * np.sqrt(w[keep])
