"""
Point Set Module

A homogeneous collection of n elements of one metric space. Elements are
validated against the space on construction:
1. Vectors of the right length for euclidean and lq
2. Unit vectors for sphere and projective space
3. Hyperboloid points for hyperbolic space
4. SPD matrices, orthonormal frames, (mu, sigma) pairs
5. Vertex indices of an attached graph for graph and tree
6. Character strings for string

Dependencies:
    - numpy: element storage
"""

from typing import Any, Iterator, List, Optional, Sequence

import numpy as np

from geo_kernel_lab.common.errors import ValidationError
from geo_kernel_lab.common.SpaceSpec import SpaceKind, SpaceSpec
from geo_kernel_lab.common.WeightedGraph import WeightedGraph
from geo_kernel_lab.manifolds.grassmann import validate_frame
from geo_kernel_lab.manifolds.graphs import validate_tree
from geo_kernel_lab.manifolds.hyperbolic import validate_hyperboloid_point
from geo_kernel_lab.manifolds.normal import validate_normal_parameters
from geo_kernel_lab.manifolds.spd import validate_spd
from geo_kernel_lab.manifolds.sphere import validate_unit_vector


def _vector_of_length(element: Any, length: int) -> np.ndarray:
    x = np.asarray(element, dtype=float).ravel()
    if x.size != length:
        raise ValidationError(f"expected a vector of length {length}, got {x.size}")
    if not np.all(np.isfinite(x)):
        raise ValidationError("vector contains non-finite entries")
    return x


class PointSet:
    """
    Homogeneous collection of points of one space.

    Attributes:
        space (SpaceSpec): The space every element belongs to
        elements (list): The validated points
        graph (WeightedGraph): Underlying graph for graph and tree kinds
    """

    def __init__(self, space: SpaceSpec, elements: Sequence[Any],
                 graph: Optional[WeightedGraph] = None) -> None:
        """
        Validate and store the elements.

        Raises:
            ValidationError: an element does not belong to the space, the
                set is empty or a graph is missing or misplaced
        """
        self.space: SpaceSpec = space
        self.graph: Optional[WeightedGraph] = graph
        if len(elements) == 0:
            raise ValidationError("a point set needs at least one element")

        if space.kind in (SpaceKind.GRAPH, SpaceKind.TREE):
            if graph is None:
                raise ValidationError(
                    f"{space.kind.value} point sets need the underlying graph")
            if space.kind is SpaceKind.TREE:
                validate_tree(graph)
        elif graph is not None:
            raise ValidationError(
                f"{space.kind.value} point sets take no graph")

        validated: List[Any] = []
        for index, element in enumerate(elements):
            try:
                validated.append(self._validate(element))
            except ValidationError as e:
                raise ValidationError(f"element {index}: {e}") from None
        self.elements: List[Any] = validated

    def _validate(self, element: Any) -> Any:
        kind, dim = self.space.kind, self.space.dim
        if kind in (SpaceKind.EUCLIDEAN, SpaceKind.LQ):
            return _vector_of_length(element, dim)  # type: ignore[arg-type]
        if kind in (SpaceKind.SPHERE, SpaceKind.PROJECTIVE):
            return validate_unit_vector(_vector_of_length(element, dim))  # type: ignore[arg-type]
        if kind is SpaceKind.HYPERBOLIC:
            return validate_hyperboloid_point(
                _vector_of_length(element, dim + 1))  # type: ignore[operator]
        if kind is SpaceKind.SPD:
            a = validate_spd(element)
            if a.shape != (dim, dim):
                raise ValidationError(f"expected a {dim}x{dim} matrix, got {a.shape}")
            return a
        if kind is SpaceKind.GRASSMANN:
            u = validate_frame(element)
            if u.shape != (dim, self.space.subspace_dim):
                raise ValidationError(
                    f"expected a {dim}x{self.space.subspace_dim} frame, got {u.shape}")
            return u
        if kind is SpaceKind.NORMAL:
            return validate_normal_parameters(element)
        if kind in (SpaceKind.GRAPH, SpaceKind.TREE):
            vertex = int(element)
            if not 0 <= vertex < self.graph.vertex_count:  # type: ignore[union-attr]
                raise ValidationError(
                    f"vertex {vertex} outside 0..{self.graph.vertex_count - 1}")  # type: ignore[union-attr]
            return vertex
        if not isinstance(element, str):
            raise ValidationError(
                f"string elements must be str, got {type(element).__name__}")
        return element

    @property
    def n(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.elements)

    def __getitem__(self, index: int) -> Any:
        return self.elements[index]

    def __repr__(self) -> str:
        return f"PointSet(space={self.space.describe()}, n={self.n})"
