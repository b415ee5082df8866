"""
Error types shared by every GeoKernelLab module.

The command line maps these onto exit codes, so every failure raised by
the numerical code is one of the classes below (or an ``OSError`` from
persistence).
"""

from typing import Hashable


class GeoKernelError(Exception):
    """Base class for all GeoKernelLab errors."""


class ValidationError(GeoKernelError, ValueError):
    """An input does not satisfy the invariants of its type."""


class DomainError(GeoKernelError, ValueError):
    """An argument lies outside the domain of a formula."""


class UnsupportedOperationError(GeoKernelError, NotImplementedError):
    """The operation is not defined for the requested space kind."""


class GeodesicNotUniqueError(DomainError):
    """The two endpoints are joined by more than one minimizing geodesic."""


class DisconnectedGraphError(ValidationError):
    """
    A graph has at least two vertices with no path between them.

    Attributes:
        source: A vertex in one connected component
        target: A vertex in a different connected component
    """

    def __init__(self, source: Hashable, target: Hashable,
                 hint: str = "") -> None:
        self.source = source
        self.target = target
        message = (f"graph is disconnected: no path between vertex "
                   f"{source} and vertex {target}")
        if hint:
            message = f"{message}; {hint}"
        super().__init__(message)
