"""
Closed-form geodesic distances and geodesic interpolation.
"""

from geo_kernel_lab.manifolds.vector import euclidean_distance, lq_distance
from geo_kernel_lab.manifolds.sphere import (
    projective_distance, sphere_distance, sphere_interpolate, validate_unit_vector)
from geo_kernel_lab.manifolds.hyperbolic import (
    hyperbolic_distance, hyperbolic_exp_at_origin, hyperbolic_interpolate,
    minkowski_inner, validate_hyperboloid_point)
from geo_kernel_lab.manifolds.spd import spd_distance, spd_interpolate, validate_spd
from geo_kernel_lab.manifolds.grassmann import (
    grassmann_distance, principal_angles, validate_frame)
from geo_kernel_lab.manifolds.normal import normal_fisher_distance
from geo_kernel_lab.manifolds.graphs import (
    graph_shortest_paths, tree_distance, tree_distance_matrix)
from geo_kernel_lab.manifolds.strings import edit_distance
from geo_kernel_lab.manifolds.geodesics import geodesic_interpolate, point_distance

__all__ = [
    'euclidean_distance', 'lq_distance',
    'sphere_distance', 'projective_distance', 'sphere_interpolate',
    'validate_unit_vector',
    'hyperbolic_distance', 'hyperbolic_exp_at_origin', 'hyperbolic_interpolate',
    'minkowski_inner', 'validate_hyperboloid_point',
    'spd_distance', 'spd_interpolate', 'validate_spd',
    'grassmann_distance', 'principal_angles', 'validate_frame',
    'normal_fisher_distance',
    'graph_shortest_paths', 'tree_distance', 'tree_distance_matrix',
    'edit_distance',
    'geodesic_interpolate', 'point_distance',
]
