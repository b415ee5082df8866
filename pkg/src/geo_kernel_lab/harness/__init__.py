"""
Samplers, experiment runner, result files and the verdict-matrix check.
"""

from geo_kernel_lab.harness.sampling import (
    attach_graph, build_neighbor_graph, build_point_set, epsilon_for_connectivity,
    frechet_embedding, k23_graph, k23_lq_points, k23_strings, random_tree,
    sample_points, sample_strings, substream, two_cluster_cloud)
from geo_kernel_lab.harness.pairwise import pairwise_distances
from geo_kernel_lab.harness.persistence import (
    load_distance_matrix, read_plot_data, read_result_document,
    save_distance_matrix, write_plot_data, write_result_document)
from geo_kernel_lab.harness.ExperimentRunner import (
    ExperimentConfig, ExperimentResult, ExperimentRunner, reference_panels, run_experiment,
    spectrum_rows)
from geo_kernel_lab.harness.VerdictMatrix import (
    ROWS, Column, RowResult, VerdictMatrix, VerdictRow)

__all__ = [
    'substream', 'sample_points', 'two_cluster_cloud', 'epsilon_for_connectivity',
    'build_neighbor_graph', 'random_tree', 'sample_strings', 'k23_strings',
    'k23_graph', 'frechet_embedding', 'k23_lq_points', 'attach_graph',
    'build_point_set', 'pairwise_distances',
    'write_plot_data', 'read_plot_data', 'write_result_document',
    'read_result_document', 'load_distance_matrix', 'save_distance_matrix',
    'ExperimentConfig', 'ExperimentResult', 'ExperimentRunner',
    'reference_panels', 'run_experiment', 'spectrum_rows',
    'ROWS', 'Column', 'RowResult', 'VerdictMatrix', 'VerdictRow',
]
