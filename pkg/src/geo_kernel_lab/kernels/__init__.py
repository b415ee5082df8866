"""
Geodesic exponential kernels and CND-derived constructions.
"""

from geo_kernel_lab.kernels.exponential import (
    GramMatrix, KernelSpec, exp_kernel_value, gram_matrix)
from geo_kernel_lab.kernels.cnd import (
    centered_cnd_kernel, sqrt_distance_matrix, sqrt_metric_embedding)

__all__ = [
    'KernelSpec', 'GramMatrix', 'exp_kernel_value', 'gram_matrix',
    'centered_cnd_kernel', 'sqrt_distance_matrix', 'sqrt_metric_embedding',
]
