"""
Distances on flat vector spaces: the Euclidean norm and l_q norms, q > 2.
"""

import numpy as np

from geo_kernel_lab.common.errors import DomainError, ValidationError


def as_vector_pair(x: np.ndarray, y: np.ndarray) -> tuple:
    """Return both inputs as 1-D float arrays of equal length."""
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.shape != y.shape:
        raise ValidationError(
            f"vectors must have equal dimensions, got {x.size} and {y.size}")
    return x, y


def euclidean_distance(x: np.ndarray, y: np.ndarray) -> float:
    x, y = as_vector_pair(x, y)
    return float(np.linalg.norm(x - y))


def lq_distance(x: np.ndarray, y: np.ndarray, q_norm: float) -> float:
    """
    Distance induced by the l_q norm, (sum |x_i - y_i|^q)^(1/q).

    Raises:
        DomainError: q_norm <= 2 (the Euclidean case has its own kind)
    """
    if not q_norm > 2.0:
        raise DomainError(
            f"lq_distance needs q_norm > 2, got {q_norm}; "
            f"use the euclidean kind for q_norm = 2")
    x, y = as_vector_pair(x, y)
    return float(np.sum(np.abs(x - y) ** q_norm) ** (1.0 / q_norm))
