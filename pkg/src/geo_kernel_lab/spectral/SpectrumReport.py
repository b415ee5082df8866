"""
Spectrum Report Module

Result types of the spectral checks:
1. SpectrumReport: sorted eigenvalues of one analyzed matrix and its verdict
2. LambdaSweep: PD verdicts of one kernel exponent across a bandwidth grid
3. SchonbergReport: agreement between the CND verdict of a distance and
   the PD verdicts of its Laplacian kernels

Sampling cannot prove a universal claim, so passing verdicts read as
"no violation found" and failing verdicts carry their witness.

Dependencies:
    - numpy: eigenvalue bookkeeping
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np

from geo_kernel_lab.common.errors import ValidationError
from geo_kernel_lab.common.SpaceSpec import SpaceSpec
from geo_kernel_lab.kernels.exponential import KernelSpec


class Verdict(str, Enum):
    PD = "PD"
    NOT_PD = "NOT_PD"
    CND = "CND"
    NOT_CND = "NOT_CND"


class SweepVerdict(str, Enum):
    PD_FOR_ALL_TESTED = "PD_FOR_ALL_TESTED"
    FAILS_AT = "FAILS_AT"


class CrosscheckStatus(str, Enum):
    AGREE = "AGREE"
    DISAGREE = "DISAGREE"
    UNRESOLVED = "UNRESOLVED"


def _space_to_dict(space: Optional[SpaceSpec]) -> Optional[Dict[str, Any]]:
    return space.to_dict() if space is not None else None


def _space_from_dict(data: Optional[Dict[str, Any]]) -> Optional[SpaceSpec]:
    return SpaceSpec.from_dict(data) if data is not None else None


@dataclass
class SpectrumReport:
    """
    Eigenvalues of one analyzed matrix and the verdict drawn from them.

    Attributes:
        eigenvalues (list): Eigenvalues sorted descending
        min_eigenvalue (float): The last eigenvalue
        tolerance (float): Threshold the verdict was drawn against
        verdict (Verdict): PD/NOT_PD for Gram matrices, CND/NOT_CND for
            distance matrices
        n (int): Sample size
        kernel (KernelSpec): Kernel of a Gram matrix, None for CND checks
        space (SpaceSpec): Provenance of the sample
    """

    eigenvalues: List[float]
    min_eigenvalue: float
    tolerance: float
    verdict: Verdict
    n: int
    kernel: Optional[KernelSpec] = None
    space: Optional[SpaceSpec] = None

    def __post_init__(self) -> None:
        self.verdict = Verdict(self.verdict)
        values = [float(v) for v in self.eigenvalues]
        if any(a < b for a, b in zip(values, values[1:])):
            raise ValidationError("eigenvalues must be sorted descending")
        if values and values[-1] != self.min_eigenvalue:
            raise ValidationError("min_eigenvalue must equal the last eigenvalue")
        self.eigenvalues = values

    @property
    def passed(self) -> bool:
        return self.verdict in (Verdict.PD, Verdict.CND)

    def describe(self) -> str:
        """One-line verdict worded for sampled evidence."""
        if self.verdict is Verdict.PD:
            return f"PD (no violation found at n={self.n})"
        if self.verdict is Verdict.CND:
            return f"CND (no violation found at n={self.n})"
        where = f"witness λ={self.kernel.lam:.6g}, " if self.kernel else "witness found, "
        label = "NOT PD" if self.verdict is Verdict.NOT_PD else "NOT CND"
        return f"{label} ({where}min eig={self.min_eigenvalue:.6e})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "eigenvalues": list(self.eigenvalues),
            "min_eigenvalue": self.min_eigenvalue,
            "tolerance": self.tolerance,
            "verdict": self.verdict.value,
            "n": self.n,
            "kernel": self.kernel.to_dict() if self.kernel else None,
            "space": _space_to_dict(self.space),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SpectrumReport":
        kernel = data.get("kernel")
        return cls(
            eigenvalues=list(data["eigenvalues"]),
            min_eigenvalue=float(data["min_eigenvalue"]),
            tolerance=float(data["tolerance"]),
            verdict=Verdict(data["verdict"]),
            n=int(data["n"]),
            kernel=KernelSpec.from_dict(kernel) if kernel else None,
            space=_space_from_dict(data.get("space")),
        )


@dataclass
class LambdaSweep:
    """
    PD verdicts of exp(-lambda D^q) over a grid of bandwidths.

    Attributes:
        grid (list): Strictly increasing lambda values
        q (float): Kernel exponent
        min_eigenvalues (list): One minimum Gram eigenvalue per grid point
        tolerances (list): One PD tolerance per grid point
        verdict (SweepVerdict): PD_FOR_ALL_TESTED or FAILS_AT
        failing_lambdas (list): Grid values whose Gram matrix is not PD
        n (int): Sample size
        space (SpaceSpec): Provenance of the sample
        reports (list): Full spectrum per grid point, not serialized
    """

    grid: List[float]
    q: float
    min_eigenvalues: List[float]
    tolerances: List[float]
    verdict: SweepVerdict
    failing_lambdas: List[float]
    n: int
    space: Optional[SpaceSpec] = None
    reports: List[SpectrumReport] = field(default_factory=list, compare=False, repr=False)

    def __post_init__(self) -> None:
        self.verdict = SweepVerdict(self.verdict)
        if len(self.min_eigenvalues) != len(self.grid):
            raise ValidationError("a sweep needs one min eigenvalue per grid point")

    @property
    def passed(self) -> bool:
        return self.verdict is SweepVerdict.PD_FOR_ALL_TESTED

    @property
    def worst(self) -> Optional[float]:
        """Most negative minimum eigenvalue over the grid."""
        return min(self.min_eigenvalues) if self.min_eigenvalues else None

    def describe(self) -> str:
        if self.passed:
            return (f"PD (no violation found at n={self.n} over "
                    f"{len(self.grid)} λ values)")
        index = int(np.argmin(self.min_eigenvalues))
        return (f"NOT PD (witness λ={self.grid[index]:.6g}, "
                f"min eig={self.min_eigenvalues[index]:.6e})")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "grid": list(self.grid),
            "q": self.q,
            "min_eigenvalues": list(self.min_eigenvalues),
            "tolerances": list(self.tolerances),
            "verdict": self.verdict.value,
            "failing_lambdas": list(self.failing_lambdas),
            "n": self.n,
            "space": _space_to_dict(self.space),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LambdaSweep":
        return cls(
            grid=[float(v) for v in data["grid"]],
            q=float(data["q"]),
            min_eigenvalues=[float(v) for v in data["min_eigenvalues"]],
            tolerances=[float(v) for v in data["tolerances"]],
            verdict=SweepVerdict(data["verdict"]),
            failing_lambdas=[float(v) for v in data["failing_lambdas"]],
            n=int(data["n"]),
            space=_space_from_dict(data.get("space")),
        )


@dataclass
class SchonbergReport:
    """
    Agreement of the CND verdict with the Laplacian lambda-sweep.

    Attributes:
        status (CrosscheckStatus): AGREE, DISAGREE or UNRESOLVED
        cnd_verdict (Verdict): CND or NOT_CND
        cnd_witness (float): Most negative eigenvalue of the deflated check
        sweep (LambdaSweep): The q = 1 sweep
        probe_lambda (float): Bandwidth found by searching along the CND
            witness direction, when the grid alone showed no failure
        probe_value (float): Quadratic form of the Gram matrix along the
            witness direction at ``probe_lambda``
        message (str): Human-readable explanation
    """

    status: CrosscheckStatus
    cnd_verdict: Verdict
    cnd_witness: float
    sweep: LambdaSweep
    probe_lambda: Optional[float] = None
    probe_value: Optional[float] = None
    message: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": CrosscheckStatus(self.status).value,
            "cnd_verdict": Verdict(self.cnd_verdict).value,
            "cnd_witness": self.cnd_witness,
            "sweep": self.sweep.to_dict(),
            "probe_lambda": self.probe_lambda,
            "probe_value": self.probe_value,
            "message": self.message,
        }
