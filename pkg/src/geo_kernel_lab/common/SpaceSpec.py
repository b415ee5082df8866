"""
Space Specification Module

This module describes which metric space a sample lives in:
1. The space kind (sphere, hyperbolic space, SPD matrices, ...)
2. Its dimension where the kind has one
3. The metric variant for spaces carrying several metrics
4. The exponent of the l_q norm

Key Features:
- Validation of the kind/dimension/variant combination on construction
- Plain-dict conversion for result documents

Dependencies:
    - errors: ValidationError for invalid combinations
"""

from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Dict, Optional

from geo_kernel_lab.common.errors import ValidationError


class SpaceKind(str, Enum):
    """Kinds of metric space known to the toolkit."""

    EUCLIDEAN = "euclidean"
    LQ = "lq"
    SPHERE = "sphere"
    PROJECTIVE = "projective"
    HYPERBOLIC = "hyperbolic"
    SPD = "spd"
    GRASSMANN = "grassmann"
    NORMAL = "normal"
    GRAPH = "graph"
    TREE = "tree"
    STRING = "string"


class SpdMetric(str, Enum):
    """Metrics on symmetric positive definite matrices."""

    FROBENIUS = "frobenius"
    LOG_EUCLIDEAN = "log_euclidean"
    AFFINE_INVARIANT = "affine_invariant"
    FISHER = "fisher"


class GrassmannMetric(str, Enum):
    """Metrics on the Grassmannian."""

    INTRINSIC = "intrinsic"
    CHORDAL = "chordal"


# Kinds whose points are vectors or matrices of a fixed size
DIMENSIONED_KINDS = frozenset({
    SpaceKind.EUCLIDEAN, SpaceKind.LQ, SpaceKind.SPHERE,
    SpaceKind.PROJECTIVE, SpaceKind.HYPERBOLIC, SpaceKind.SPD,
    SpaceKind.GRASSMANN,
})

VARIANTS = {
    SpaceKind.SPD: SpdMetric,
    SpaceKind.GRASSMANN: GrassmannMetric,
}


@dataclass(frozen=True)
class SpaceSpec:
    """
    Tagged description of one metric space instance.

    Attributes:
        kind (SpaceKind): Which space
        dim (int): Vector length for euclidean/lq/sphere/projective,
            intrinsic dimension for hyperbolic (points have dim + 1
            coordinates), matrix size for spd, ambient dimension for
            grassmann. None for kinds without a dimension.
        metric_variant (str): Metric name for spd and grassmann, else None
        q_norm (float): Exponent of the l_q norm, only for kind lq
        subspace_dim (int): Subspace dimension k, only for grassmann
    """

    kind: SpaceKind
    dim: Optional[int] = None
    metric_variant: Optional[str] = None
    q_norm: Optional[float] = None
    subspace_dim: Optional[int] = None

    def __post_init__(self) -> None:
        try:
            kind = SpaceKind(self.kind)
        except ValueError:
            raise ValidationError(f"unknown space kind: {self.kind!r}") from None
        object.__setattr__(self, "kind", kind)

        if kind in DIMENSIONED_KINDS:
            if self.dim is None or int(self.dim) < 1:
                raise ValidationError(
                    f"space kind {kind.value} needs dim >= 1, got {self.dim}")
            object.__setattr__(self, "dim", int(self.dim))
        elif self.dim is not None:
            raise ValidationError(
                f"space kind {kind.value} takes no dim, got {self.dim}")

        if kind in VARIANTS:
            if self.metric_variant is None:
                raise ValidationError(
                    f"space kind {kind.value} needs a metric_variant")
            try:
                variant = VARIANTS[kind](self.metric_variant).value
            except ValueError:
                allowed = ", ".join(v.value for v in VARIANTS[kind])
                raise ValidationError(
                    f"unknown {kind.value} metric_variant "
                    f"{self.metric_variant!r} (expected one of {allowed})") from None
            object.__setattr__(self, "metric_variant", variant)
        elif self.metric_variant is not None:
            raise ValidationError(
                f"space kind {kind.value} takes no metric_variant")

        if kind is SpaceKind.LQ:
            if self.q_norm is None or not float(self.q_norm) > 2.0:
                raise ValidationError(
                    f"lq spaces need q_norm > 2, got {self.q_norm} "
                    f"(use kind euclidean for q_norm = 2)")
            object.__setattr__(self, "q_norm", float(self.q_norm))
        elif self.q_norm is not None:
            raise ValidationError(
                f"space kind {kind.value} takes no q_norm")

        if kind is SpaceKind.GRASSMANN:
            k = 1 if self.subspace_dim is None else int(self.subspace_dim)
            if not 1 <= k <= int(self.dim):  # type: ignore[arg-type]
                raise ValidationError(
                    f"grassmann subspace_dim must lie in [1, {self.dim}], "
                    f"got {self.subspace_dim}")
            object.__setattr__(self, "subspace_dim", k)
        elif self.subspace_dim is not None:
            raise ValidationError(
                f"space kind {kind.value} takes no subspace_dim")

    def with_variant(self, variant: str) -> "SpaceSpec":
        """Return a copy of this space carrying another metric variant."""
        return replace(self, metric_variant=variant)

    def describe(self) -> str:
        """Short human-readable label, e.g. ``spd(3, affine_invariant)``."""
        parts = []
        if self.dim is not None:
            parts.append(str(self.dim))
        if self.subspace_dim is not None:
            parts.append(f"k={self.subspace_dim}")
        if self.q_norm is not None:
            parts.append(f"q={self.q_norm:g}")
        if self.metric_variant is not None:
            parts.append(self.metric_variant)
        inner = ", ".join(parts)
        return f"{self.kind.value}({inner})" if inner else self.kind.value

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "dim": self.dim,
            "metric_variant": self.metric_variant,
            "q_norm": self.q_norm,
            "subspace_dim": self.subspace_dim,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SpaceSpec":
        return cls(
            kind=data["kind"],
            dim=data.get("dim"),
            metric_variant=data.get("metric_variant"),
            q_norm=data.get("q_norm"),
            subspace_dim=data.get("subspace_dim"),
        )
