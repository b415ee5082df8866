"""
Eigen Module

Eigenspectra of symmetric matrices and the finite-sample PD and CND
verdicts drawn from them.

Key Features:
- Relative tolerance 1e-8 n max|entry|, so round-off growing with n
  is not mistaken for a violation
- CND check by deflation: D is CND on the sample iff -Q^T D Q is PSD,
  Q an orthonormal basis of the vectors orthogonal to the all-ones vector

Dependencies:
    - numpy: array handling
    - scipy.linalg: eigvalsh/eigh and null_space
"""

from typing import Optional, Tuple, Union

import numpy as np
from scipy import linalg

from geo_kernel_lab.common.DistanceMatrix import DistanceMatrix, check_square
from geo_kernel_lab.common.errors import ValidationError
from geo_kernel_lab.common.SpaceSpec import SpaceSpec
from geo_kernel_lab.config.logging_config import LoggingConfig
from geo_kernel_lab.kernels.exponential import GramMatrix, KernelSpec, gram_matrix
from geo_kernel_lab.spectral.SpectrumReport import SpectrumReport, Verdict

logger = LoggingConfig.get_logger(__name__)

SYMMETRY_TOLERANCE = 1e-10
RELATIVE_TOLERANCE = 1e-8

MatrixLike = Union[np.ndarray, DistanceMatrix, GramMatrix]


def _entries(matrix: MatrixLike) -> np.ndarray:
    if isinstance(matrix, (DistanceMatrix, GramMatrix)):
        return matrix.entries
    return check_square(matrix)


def _symmetric(matrix: MatrixLike) -> np.ndarray:
    s = _entries(matrix)
    scale = float(np.max(np.abs(s))) if s.size else 0.0
    if s.size and float(np.max(np.abs(s - s.T))) > SYMMETRY_TOLERANCE * scale:
        raise ValidationError(
            f"matrix is not symmetric (max |S - S^T| = "
            f"{float(np.max(np.abs(s - s.T))):.3e})")
    return 0.5 * (s + s.T)


def default_tolerance(matrix: MatrixLike) -> float:
    """1e-8 n max|entry|."""
    s = _entries(matrix)
    if not s.size:
        return 0.0
    return RELATIVE_TOLERANCE * s.shape[0] * float(np.max(np.abs(s)))


def eigenspectrum(matrix: MatrixLike) -> np.ndarray:
    """
    All eigenvalues of a symmetric matrix, sorted descending.

    Raises:
        ValidationError: not square or not symmetric within 1e-10 max|entry|
    """
    s = _symmetric(matrix)
    return linalg.eigvalsh(s)[::-1] if s.size else np.zeros(0)


def pd_verdict(matrix: MatrixLike,
               tol: Optional[float] = None) -> Tuple[Verdict, float]:
    """
    PD iff the minimum eigenvalue is at least -tol.

    Returns:
        tuple: (verdict, minimum eigenvalue)
    """
    spectrum = eigenspectrum(matrix)
    tol = default_tolerance(matrix) if tol is None else float(tol)
    min_eig = float(spectrum[-1]) if spectrum.size else 0.0
    return (Verdict.PD if min_eig >= -tol else Verdict.NOT_PD), min_eig


def deflated_distance_spectrum(matrix: MatrixLike) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigenpairs of -Q^T D Q, ascending, with eigenvectors mapped back to R^n.

    Each returned vector c sums to zero and has c^T D c = -eigenvalue.

    Raises:
        ValidationError: asymmetric input or nonzero diagonal
    """
    d = _symmetric(matrix)
    n = d.shape[0]
    if n and float(np.max(np.abs(np.diag(d)))) > 0.0:
        raise ValidationError("CND check needs a zero diagonal")
    if n <= 1:
        return np.zeros(0), np.zeros((n, 0))
    basis = linalg.null_space(np.ones((1, n)))
    projected = -basis.T @ d @ basis
    w, v = linalg.eigh(0.5 * (projected + projected.T))
    return w, basis @ v


def cnd_verdict(matrix: MatrixLike,
                tol: Optional[float] = None) -> Tuple[Verdict, float]:
    """
    CND iff every eigenvalue of -D on the zero-sum subspace is at least -tol.

    Returns:
        tuple: (verdict, most negative deflated eigenvalue as witness)
    """
    w, _ = deflated_distance_spectrum(matrix)
    tol = default_tolerance(matrix) if tol is None else float(tol)
    witness = float(w[0]) if w.size else 0.0
    verdict = Verdict.CND if witness >= -tol else Verdict.NOT_CND
    logger.debug("CND check n=%d witness=%.3e tol=%.3e -> %s",
                 _entries(matrix).shape[0], witness, tol, verdict.value)
    return verdict, witness


def spectrum_report(gram: GramMatrix, tol: Optional[float] = None) -> SpectrumReport:
    """Full eigenspectrum and PD verdict of a Gram matrix."""
    spectrum = eigenspectrum(gram)
    tol = default_tolerance(gram) if tol is None else float(tol)
    min_eig = float(spectrum[-1])
    return SpectrumReport(
        eigenvalues=[float(v) for v in spectrum],
        min_eigenvalue=min_eig,
        tolerance=tol,
        verdict=Verdict.PD if min_eig >= -tol else Verdict.NOT_PD,
        n=gram.n,
        kernel=gram.kernel,
        space=gram.space,
    )


def cnd_report(distances: MatrixLike, tol: Optional[float] = None,
               space: Optional[SpaceSpec] = None) -> SpectrumReport:
    """Deflated spectrum of -D (n - 1 values) and the CND verdict."""
    w, _ = deflated_distance_spectrum(distances)
    tol = default_tolerance(distances) if tol is None else float(tol)
    spectrum = [float(v) for v in w[::-1]]
    min_eig = spectrum[-1] if spectrum else 0.0
    if space is None and isinstance(distances, DistanceMatrix):
        space = distances.space
    return SpectrumReport(
        eigenvalues=spectrum,
        min_eigenvalue=min_eig,
        tolerance=tol,
        verdict=Verdict.CND if min_eig >= -tol else Verdict.NOT_CND,
        n=_entries(distances).shape[0],
        space=space,
    )


def gram_report(distances: DistanceMatrix, kernel: KernelSpec,
                tol: Optional[float] = None) -> SpectrumReport:
    """Spectrum report of exp(-lambda D^q) for one kernel."""
    return spectrum_report(gram_matrix(distances, kernel), tol)
