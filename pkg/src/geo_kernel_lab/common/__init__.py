"""
Common domain types and errors for GeoKernelLab
"""

from geo_kernel_lab.common.errors import (
    DisconnectedGraphError, DomainError, GeodesicNotUniqueError, GeoKernelError,
    UnsupportedOperationError, ValidationError)
from geo_kernel_lab.common.SpaceSpec import GrassmannMetric, SpaceKind, SpaceSpec, SpdMetric
from geo_kernel_lab.common.WeightedGraph import WeightedGraph
from geo_kernel_lab.common.DistanceMatrix import DistanceMatrix

__all__ = [
    'GeoKernelError', 'ValidationError', 'DomainError',
    'UnsupportedOperationError', 'GeodesicNotUniqueError', 'DisconnectedGraphError',
    'SpaceKind', 'SpdMetric', 'GrassmannMetric', 'SpaceSpec',
    'WeightedGraph', 'DistanceMatrix',
]
