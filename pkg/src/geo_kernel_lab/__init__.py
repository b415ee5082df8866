"""
GeoKernelLab - Geodesic exponential kernels on curved spaces, tested on samples
"""

__version__ = "0.1.0"

from geo_kernel_lab.config import LabConfig, LoggingConfig
from geo_kernel_lab.common import (
    DistanceMatrix, GeoKernelError, SpaceKind, SpaceSpec, ValidationError, WeightedGraph)
from geo_kernel_lab.common.PointSet import PointSet
from geo_kernel_lab.kernels import KernelSpec, gram_matrix
from geo_kernel_lab.spectral import cnd_verdict, lambda_sweep, pd_verdict, schonberg_crosscheck
from geo_kernel_lab.harness import ExperimentConfig, ExperimentRunner, run_experiment

__all__ = [
    'LabConfig',
    'LoggingConfig',
    'GeoKernelError',
    'ValidationError',
    'SpaceKind',
    'SpaceSpec',
    'PointSet',
    'WeightedGraph',
    'DistanceMatrix',
    'KernelSpec',
    'gram_matrix',
    'pd_verdict',
    'cnd_verdict',
    'lambda_sweep',
    'schonberg_crosscheck',
    'ExperimentConfig',
    'ExperimentRunner',
    'run_experiment',
    '__version__'
]
