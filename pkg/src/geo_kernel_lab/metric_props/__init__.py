"""
Metric axioms, comparison triangles and CAT(kappa) checks.
"""

from geo_kernel_lab.metric_props.axioms import AxiomReport, check_metric_axioms
from geo_kernel_lab.metric_props.comparison import (
    ComparisonTriangle, comparison_triangle, model_diameter, model_distance)
from geo_kernel_lab.metric_props.cat import (
    CatReport, CatSample, CatVerdict, GeodesicReport, cat_check,
    check_geodesic_property, edge_fractions)

__all__ = [
    'AxiomReport', 'check_metric_axioms',
    'ComparisonTriangle', 'comparison_triangle', 'model_diameter', 'model_distance',
    'CatReport', 'CatSample', 'CatVerdict', 'GeodesicReport',
    'cat_check', 'check_geodesic_property', 'edge_fractions',
]
