"""
Exponential Kernel Module

Geodesic exponential kernels k(x, y) = exp(-lambda d(x, y)^q): the
Gaussian kernel for q = 2 and the Laplacian kernel for q = 1.

Key Features:
- Scalar kernel evaluation and vectorized Gram matrix construction
- Gram matrices carry their kernel parameters and space provenance

Dependencies:
    - numpy: vectorized exponentials
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Union

import numpy as np

from geo_kernel_lab.common.DistanceMatrix import (
    SYMMETRY_TOLERANCE, DistanceMatrix, as_distance_matrix, check_square)
from geo_kernel_lab.common.errors import DomainError, ValidationError
from geo_kernel_lab.common.SpaceSpec import SpaceSpec
from geo_kernel_lab.config.logging_config import LoggingConfig

logger = LoggingConfig.get_logger(__name__)


@dataclass(frozen=True)
class KernelSpec:
    """
    Parameters of one exponential kernel.

    Attributes:
        lam (float): Bandwidth lambda > 0
        q (float): Exponent q > 0
    """

    lam: float
    q: float

    def __post_init__(self) -> None:
        for name, value in (("lambda", self.lam), ("q", self.q)):
            if not np.isfinite(value) or not float(value) > 0.0:
                raise ValidationError(f"kernel {name} must be positive, got {value}")
        object.__setattr__(self, "lam", float(self.lam))
        object.__setattr__(self, "q", float(self.q))

    @property
    def name(self) -> str:
        if self.q == 2.0:
            return "gaussian"
        if self.q == 1.0:
            return "laplacian"
        return f"exponential(q={self.q:g})"

    def to_dict(self) -> Dict[str, float]:
        return {"lambda": self.lam, "q": self.q}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "KernelSpec":
        return cls(lam=data["lambda"], q=data["q"])


class GramMatrix:
    """
    Symmetric matrix of kernel values on a finite sample.

    Entries lie in (0, 1] up to floating point: exp(-lambda d^q) may
    underflow to 0 for large bandwidths. Underflowed entries are counted
    and logged as a warning.

    Attributes:
        entries (np.ndarray): Kernel values (read-only)
        kernel (KernelSpec): Kernel parameters
        space (SpaceSpec): Provenance of the sample
        underflow_count (int): Off-diagonal entries that underflowed to 0
    """

    def __init__(self, entries: np.ndarray, kernel: KernelSpec,
                 space: Optional[SpaceSpec] = None) -> None:
        matrix = check_square(entries, "Gram matrix").copy()
        if matrix.size:
            if float(np.max(np.abs(matrix - matrix.T))) > SYMMETRY_TOLERANCE:
                raise ValidationError("Gram matrix is not symmetric")
            if not np.all(np.diag(matrix) == 1.0):
                raise ValidationError("exponential Gram matrix must have unit diagonal")
            if float(np.min(matrix)) < 0.0 or float(np.max(matrix)) > 1.0:
                raise ValidationError("Gram matrix entries must lie in [0, 1]")
        matrix.setflags(write=False)
        self.underflow_count: int = int(np.count_nonzero(matrix == 0.0))
        if self.underflow_count:
            logger.warning("Gram matrix lambda=%g q=%g: %d of %d off-diagonal entries "
                           "underflowed to 0", kernel.lam, kernel.q, self.underflow_count,
                           matrix.size - matrix.shape[0])
        self.entries: np.ndarray = matrix
        self.kernel: KernelSpec = kernel
        self.space: Optional[SpaceSpec] = space

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    def __repr__(self) -> str:
        return (f"GramMatrix(n={self.n}, lambda={self.kernel.lam:g}, "
                f"q={self.kernel.q:g})")


def exp_kernel_value(d: float, spec: KernelSpec) -> float:
    """
    Evaluate exp(-lambda d^q).

    Raises:
        DomainError: negative distance
    """
    if d < 0.0:
        raise DomainError(f"distance must be nonnegative, got {d}")
    return float(np.exp(-spec.lam * float(d) ** spec.q))


def gram_matrix(distances: Union[DistanceMatrix, np.ndarray],
                spec: KernelSpec) -> GramMatrix:
    """
    Apply the exponential kernel entrywise to a distance matrix.

    Args:
        distances: Validated distance matrix (raw arrays are validated)
        spec (KernelSpec): Kernel parameters

    Returns:
        GramMatrix: exp(-lambda D^q) with unit diagonal
    """
    d = as_distance_matrix(distances)
    entries = np.exp(-spec.lam * np.power(d.entries, spec.q))
    logger.debug("Gram matrix n=%d lambda=%g q=%g", d.n, spec.lam, spec.q)
    return GramMatrix(entries, spec, d.space)
