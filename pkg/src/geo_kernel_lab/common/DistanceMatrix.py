"""
Distance Matrix Module

A validated n x n matrix of pairwise distances on a finite sample.

Dependencies:
    - numpy: matrix storage
"""

from typing import Optional

import numpy as np

from geo_kernel_lab.common.errors import ValidationError
from geo_kernel_lab.common.SpaceSpec import SpaceSpec

SYMMETRY_TOLERANCE = 1e-12


def check_square(entries: np.ndarray, what: str = "matrix") -> np.ndarray:
    """Return ``entries`` as a float array, raising unless it is square."""
    matrix = np.asarray(entries, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValidationError(
            f"{what} must be square, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise ValidationError(f"{what} contains non-finite entries")
    return matrix


class DistanceMatrix:
    """
    Symmetric, nonnegative n x n matrix with zero diagonal.

    Attributes:
        entries (np.ndarray): The distances (read-only)
        space (SpaceSpec): Provenance of the sample, None when loaded
            from a file
    """

    def __init__(self, entries: np.ndarray,
                 space: Optional[SpaceSpec] = None) -> None:
        matrix = check_square(entries, "distance matrix").copy()
        scale = max(1.0, float(np.max(np.abs(matrix)))) if matrix.size else 1.0

        asymmetry = float(np.max(np.abs(matrix - matrix.T))) if matrix.size else 0.0
        if asymmetry > SYMMETRY_TOLERANCE * scale:
            raise ValidationError(
                f"distance matrix is not symmetric (max |D - D^T| = "
                f"{asymmetry:.3e})")
        diagonal = np.abs(np.diag(matrix))
        if matrix.size and float(np.max(diagonal)) > 0.0:
            i = int(np.argmax(diagonal))
            raise ValidationError(
                f"distance matrix has nonzero diagonal entry D[{i}][{i}] = "
                f"{matrix[i, i]:.3e}")
        if matrix.size and float(np.min(matrix)) < 0.0:
            i, j = np.unravel_index(int(np.argmin(matrix)), matrix.shape)
            raise ValidationError(
                f"distance matrix has negative entry D[{i}][{j}] = "
                f"{matrix[i, j]:.3e}")

        # exact symmetry downstream
        matrix = 0.5 * (matrix + matrix.T)
        matrix.setflags(write=False)
        self.entries: np.ndarray = matrix
        self.space: Optional[SpaceSpec] = space

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    def scaled(self, factor: float) -> "DistanceMatrix":
        """Return ``factor * D`` for a positive factor."""
        if not factor > 0.0:
            raise ValidationError(f"scale factor must be positive, got {factor}")
        return DistanceMatrix(factor * self.entries, self.space)

    def __repr__(self) -> str:
        space = self.space.describe() if self.space else "unknown"
        return f"DistanceMatrix(n={self.n}, space={space})"


def as_distance_matrix(distances) -> DistanceMatrix:
    """Wrap a raw array as a validated ``DistanceMatrix``; pass instances through."""
    if isinstance(distances, DistanceMatrix):
        return distances
    return DistanceMatrix(distances)
