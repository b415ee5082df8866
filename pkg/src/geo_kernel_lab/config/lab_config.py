"""
Lab Configuration Module

This module provides run defaults for experiments and the command line,
loaded from environment variables (and a ``.env`` file when present).
"""

import logging
import os
from typing import List, Optional

import numpy as np
from dotenv import load_dotenv

from geo_kernel_lab.common.errors import ValidationError


def make_lambda_grid(lambda_min: float, lambda_max: float, count: int) -> List[float]:
    """
    Log-spaced bandwidth grid from ``lambda_min`` to ``lambda_max``.

    Raises:
        ValidationError: non-positive bounds, max <= min with count > 1,
            or count < 1
    """
    count = int(count)
    if count < 1:
        raise ValidationError(f"lambda grid needs at least one point, got {count}")
    if not lambda_min > 0.0 or not lambda_max > 0.0:
        raise ValidationError(
            f"lambda grid bounds must be positive, got {lambda_min}:{lambda_max}")
    if count == 1:
        return [float(lambda_min)]
    if not lambda_max > lambda_min:
        raise ValidationError(
            f"lambda grid max must exceed min, got {lambda_min}:{lambda_max}")
    return [float(v) for v in
            np.logspace(np.log10(lambda_min), np.log10(lambda_max), count)]


def _env_number(name: str, default: str, cast: type) -> float:
    raw = os.getenv(name, default)
    try:
        return cast(raw)
    except ValueError:
        raise ValidationError(
            f"environment variable {name} must be a {cast.__name__}, "
            f"got {raw!r}") from None


class LabConfig:
    """
    Experiment configuration handler that loads settings from environment variables.

    Environment Variables:
        GEOKERNEL_SEED: Default RNG seed (default: 7)
        GEOKERNEL_OUTPUT_DIR: Directory for result files (default: results)
        GEOKERNEL_LAMBDA_MIN: Smallest bandwidth of the lambda grid (default: 1e-2)
        GEOKERNEL_LAMBDA_MAX: Largest bandwidth of the lambda grid (default: 1e3)
        GEOKERNEL_LAMBDA_COUNT: Number of log-spaced grid points (default: 20)
        GEOKERNEL_WORKERS: Worker threads for sweeps and experiments (default: 1)
        GEOKERNEL_LOG_LEVEL: Console log level (default: INFO)
        GEOKERNEL_LOG_DIR: Directory for the log file (optional)
    """

    def __init__(self) -> None:
        """Initialize the configuration by loading environment variables."""
        load_dotenv()  # Load environment variables from .env file

        self.seed: int = int(_env_number('GEOKERNEL_SEED', '7', int))
        self.output_dir: str = os.getenv('GEOKERNEL_OUTPUT_DIR', 'results')
        self.lambda_min: float = _env_number('GEOKERNEL_LAMBDA_MIN', '1e-2', float)
        self.lambda_max: float = _env_number('GEOKERNEL_LAMBDA_MAX', '1e3', float)
        self.lambda_count: int = int(_env_number('GEOKERNEL_LAMBDA_COUNT', '20', int))
        self.workers: int = int(_env_number('GEOKERNEL_WORKERS', '1', int))
        self.log_level: str = os.getenv('GEOKERNEL_LOG_LEVEL', 'INFO').upper()
        self.log_dir: Optional[str] = os.getenv('GEOKERNEL_LOG_DIR') or None

        if self.workers < 1:
            raise ValidationError(
                f"GEOKERNEL_WORKERS must be at least 1, got {self.workers}")

    def get_lambda_grid(self) -> List[float]:
        """
        Build the configured bandwidth grid.

        Returns:
            list: Strictly increasing, log-spaced lambda values
        """
        return make_lambda_grid(self.lambda_min, self.lambda_max, self.lambda_count)

    def get_output_dir(self) -> str:
        return self.output_dir

    def get_log_level(self) -> int:
        """
        Resolve the configured log level name.

        Returns:
            int: A ``logging`` level constant
        """
        level = logging.getLevelName(self.log_level)
        if not isinstance(level, int):
            raise ValidationError(
                f"GEOKERNEL_LOG_LEVEL is not a logging level: {self.log_level!r}")
        return level
