"""
Fisher-Rao distance between univariate normal distributions.

A point is a pair (mu, sigma) with sigma > 0. The Fisher information
metric (d mu^2 + 2 d sigma^2) / sigma^2 is sqrt(2) times the hyperbolic
half-plane metric in the coordinates (mu / sqrt(2), sigma).
"""

import numpy as np

from geo_kernel_lab.common.errors import ValidationError


def validate_normal_parameters(point: np.ndarray) -> np.ndarray:
    point = np.asarray(point, dtype=float).ravel()
    if point.size != 2:
        raise ValidationError(
            f"a normal distribution is a (mu, sigma) pair, got {point.size} values")
    if not point[1] > 0.0:
        raise ValidationError(
            f"normal distribution needs sigma > 0, got {point[1]:.6g}")
    return point


def normal_fisher_distance(p: np.ndarray, r: np.ndarray) -> float:
    p, r = validate_normal_parameters(p), validate_normal_parameters(r)
    if np.array_equal(p, r):
        return 0.0
    (mu1, s1), (mu2, s2) = p, r
    argument = 1.0 + ((mu1 - mu2) ** 2 / 2.0 + (s1 - s2) ** 2) / (2.0 * s1 * s2)
    return float(np.sqrt(2.0) * np.arccosh(max(1.0, argument)))
