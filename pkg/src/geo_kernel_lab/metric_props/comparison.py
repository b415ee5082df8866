"""
Comparison Triangle Module

Triangles in the model spaces M_kappa of constant curvature kappa with
prescribed side lengths:
1. kappa = 0: the Euclidean plane
2. kappa > 0: the sphere of radius 1/sqrt(kappa)
3. kappa < 0: the hyperboloid of radius 1/sqrt(-kappa)

Vertices are placed by the matching law of cosines. Points on the
comparison edges are produced by the model space's own geodesics.

Dependencies:
    - numpy: vertex coordinates
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from geo_kernel_lab.common.errors import DomainError, ValidationError
from geo_kernel_lab.manifolds.hyperbolic import minkowski_inner

TRIANGLE_TOLERANCE = 1e-12


def model_diameter(kappa: float) -> float:
    """D_kappa: pi/sqrt(kappa) for kappa > 0, infinite otherwise."""
    return float(np.pi / np.sqrt(kappa)) if kappa > 0.0 else float("inf")


def model_distance(kappa: float, x: np.ndarray, y: np.ndarray) -> float:
    """Distance between two points of M_kappa in the representation used here."""
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    if np.array_equal(x, y):
        return 0.0
    if kappa == 0.0:
        return float(np.linalg.norm(x - y))
    if kappa > 0.0:
        cosine = float(np.clip(kappa * np.dot(x, y), -1.0, 1.0))
        return float(np.arccos(cosine) / np.sqrt(kappa))
    cosh = max(1.0, -kappa * minkowski_inner(x, y))
    return float(np.arccosh(cosh) / np.sqrt(-kappa))


def model_interpolate(kappa: float, x: np.ndarray, y: np.ndarray,
                      t: float) -> np.ndarray:
    """Point at arc-length fraction ``t`` on the M_kappa geodesic from x to y."""
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    if t == 0.0 or np.array_equal(x, y):
        return x.copy()
    if t == 1.0:
        return y.copy()
    if kappa == 0.0:
        return (1.0 - t) * x + t * y
    length = model_distance(kappa, x, y) * np.sqrt(abs(kappa))
    if length == 0.0:
        return x.copy()
    if kappa > 0.0:
        return (np.sin((1.0 - t) * length) * x + np.sin(t * length) * y) / np.sin(length)
    return (np.sinh((1.0 - t) * length) * x + np.sinh(t * length) * y) / np.sinh(length)


@dataclass(frozen=True)
class ComparisonTriangle:
    """
    Triangle in M_kappa with prescribed side lengths.

    Vertex 0 and vertex 1 are joined by side ``a``, vertex 0 and
    vertex 2 by side ``b``, vertex 1 and vertex 2 by side ``c``.

    Attributes:
        sides (tuple): (a, b, c)
        kappa (float): Curvature of the model space
        vertices (tuple): Three points of M_kappa
    """

    sides: Tuple[float, float, float]
    kappa: float
    vertices: Tuple[np.ndarray, np.ndarray, np.ndarray]

    @property
    def perimeter(self) -> float:
        return float(sum(self.sides))

    def distance(self, x: np.ndarray, y: np.ndarray) -> float:
        return model_distance(self.kappa, x, y)

    def point_on_edge(self, start: int, end: int, t: float) -> np.ndarray:
        """Comparison point at fraction ``t`` from vertex ``start`` to vertex ``end``."""
        return model_interpolate(self.kappa, self.vertices[start],
                                 self.vertices[end], t)


def _opening_cosine(numerator: float, denominator: float) -> float:
    if denominator == 0.0:
        return 1.0
    return float(np.clip(numerator / denominator, -1.0, 1.0))


def comparison_triangle(a: float, b: float, c: float,
                        kappa: float = 0.0) -> ComparisonTriangle:
    """
    Realize side lengths (a, b, c) as a triangle in M_kappa.

    Args:
        a (float): Distance between vertices 0 and 1
        b (float): Distance between vertices 0 and 2
        c (float): Distance between vertices 1 and 2
        kappa (float): Model curvature

    Returns:
        ComparisonTriangle: Vertices realizing the three distances

    Raises:
        ValidationError: negative or non-finite side
        DomainError: triangle inequality fails, or perimeter >= 2 D_kappa
    """
    sides = tuple(float(s) for s in (a, b, c))
    if any(not np.isfinite(s) or s < 0.0 for s in sides):
        raise ValidationError(f"side lengths must be finite and nonnegative, got {sides}")
    a, b, c = sides
    slack = TRIANGLE_TOLERANCE * max(1.0, a + b + c)
    if a > b + c + slack or b > a + c + slack or c > a + b + slack:
        raise DomainError(f"side lengths {sides} violate the triangle inequality")
    kappa = float(kappa)
    if a + b + c >= 2.0 * model_diameter(kappa):
        raise DomainError(
            f"perimeter {a + b + c:.6g} is not below 2 D_kappa = "
            f"{2.0 * model_diameter(kappa):.6g} for kappa = {kappa:g}")

    if kappa == 0.0:
        cos_t = _opening_cosine(a * a + b * b - c * c, 2.0 * a * b)
        vertices = (np.zeros(2), np.array([a, 0.0]),
                    b * np.array([cos_t, np.sqrt(max(0.0, 1.0 - cos_t ** 2))]))
        return ComparisonTriangle(sides, kappa, vertices)

    scale = np.sqrt(abs(kappa))
    alpha, beta, gamma = a * scale, b * scale, c * scale
    radius = 1.0 / scale
    if kappa > 0.0:
        cos_t = _opening_cosine(np.cos(gamma) - np.cos(alpha) * np.cos(beta),
                                np.sin(alpha) * np.sin(beta))
        sin_t = np.sqrt(max(0.0, 1.0 - cos_t ** 2))
        unit = (np.array([1.0, 0.0, 0.0]),
                np.array([np.cos(alpha), np.sin(alpha), 0.0]),
                np.array([np.cos(beta), np.sin(beta) * cos_t, np.sin(beta) * sin_t]))
    else:
        cos_t = _opening_cosine(np.cosh(alpha) * np.cosh(beta) - np.cosh(gamma),
                                np.sinh(alpha) * np.sinh(beta))
        sin_t = np.sqrt(max(0.0, 1.0 - cos_t ** 2))
        unit = (np.array([1.0, 0.0, 0.0]),
                np.array([np.cosh(alpha), np.sinh(alpha), 0.0]),
                np.array([np.cosh(beta), np.sinh(beta) * cos_t, np.sinh(beta) * sin_t]))
    vertices = tuple(radius * v for v in unit)
    return ComparisonTriangle(sides, kappa, vertices)  # type: ignore[arg-type]
