"""
Lab Base Module

This module provides the foundation for the experiment drivers, including:
1. Common initialization from a ``LabConfig``
2. Shared utilities for turning numerical results into plain data

Dependencies:
    - numpy: scalar and array conversion
"""

import dataclasses
from enum import Enum
from typing import Any, Optional

import numpy as np

from geo_kernel_lab.config.lab_config import LabConfig


class LabBase:
    """
    Base class for experiment drivers providing common functionality.

    Attributes:
        config (LabConfig): Environment defaults (seed, grid, workers)
        workers (int): Worker threads for independent cells
    """

    def __init__(self, config: Optional[LabConfig] = None,
                 workers: Optional[int] = None) -> None:
        """
        Initialize the driver.

        Args:
            config (LabConfig): Configuration to use, loaded from the
                environment when None
            workers (int): Overrides ``config.workers`` when given
        """
        self.config: LabConfig = config if config is not None else LabConfig()
        self.workers: int = int(workers) if workers is not None else self.config.workers

    def _serialize_lab_data(self, data: Any) -> Any:
        """
        Serialize result structures for JSON encoding.

        This method handles:
        - numpy scalars and arrays
        - Enums, dataclasses and objects providing ``to_dict``
        - Nested dicts, lists and tuples

        Args:
            data: The data to serialize

        Returns:
            The serialized data suitable for JSON encoding
        """
        if isinstance(data, Enum):
            return data.value
        if isinstance(data, (bool, int, float, str)) or data is None:
            return data
        if isinstance(data, np.generic):
            return data.item()
        if isinstance(data, np.ndarray):
            return self._serialize_lab_data(data.tolist())
        if hasattr(data, 'to_dict'):
            return self._serialize_lab_data(data.to_dict())
        if dataclasses.is_dataclass(data) and not isinstance(data, type):
            return self._serialize_lab_data(dataclasses.asdict(data))
        if isinstance(data, dict):
            return {
                str(key): self._serialize_lab_data(value)
                for key, value in data.items()
            }
        if isinstance(data, (list, tuple)):
            return [self._serialize_lab_data(item) for item in data]
        return str(data)
