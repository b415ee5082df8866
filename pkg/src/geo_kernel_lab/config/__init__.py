"""
Configuration module for GeoKernelLab
"""

from geo_kernel_lab.config.logging_config import LoggingConfig
from geo_kernel_lab.config.lab_config import LabConfig, make_lambda_grid

__all__ = ['LoggingConfig', 'LabConfig', 'make_lambda_grid']
