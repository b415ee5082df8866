"""
Pytest fixtures for GeoKernelLab tests.
"""
import logging

import numpy as np
import pytest

from geo_kernel_lab.common.DistanceMatrix import DistanceMatrix
from geo_kernel_lab.common.SpaceSpec import SpaceKind, SpaceSpec
from geo_kernel_lab.config.lab_config import LabConfig
from geo_kernel_lab.harness.sampling import sample_points

GEOKERNEL_VARIABLES = (
    "GEOKERNEL_SEED", "GEOKERNEL_OUTPUT_DIR", "GEOKERNEL_LAMBDA_MIN",
    "GEOKERNEL_LAMBDA_MAX", "GEOKERNEL_LAMBDA_COUNT", "GEOKERNEL_WORKERS",
    "GEOKERNEL_LOG_LEVEL", "GEOKERNEL_LOG_DIR",
)

# Path metric of the complete bipartite graph K_{2,3}
K23_METRIC = np.array([[0, 2, 1, 1, 1],
                       [2, 0, 1, 1, 1],
                       [1, 1, 0, 2, 2],
                       [1, 1, 2, 0, 2],
                       [1, 1, 2, 2, 0]], dtype=float)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Keep GEOKERNEL_* variables and any .env file out of the tests."""
    for name in GEOKERNEL_VARIABLES:
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr("geo_kernel_lab.config.lab_config.load_dotenv",
                        lambda *args, **kwargs: False)


@pytest.fixture(autouse=True)
def restore_root_logging():
    """Undo handler changes made by LoggingConfig.setup."""
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    for handler in list(root.handlers):
        if handler not in handlers:
            root.removeHandler(handler)
            handler.close()
    for handler in handlers:
        if handler not in root.handlers:
            root.addHandler(handler)
    root.setLevel(level)


@pytest.fixture
def rng():
    """Provide a seeded numpy generator."""
    return np.random.default_rng(12345)


@pytest.fixture
def small_grid():
    """Provide a short lambda grid spanning four decades."""
    return [0.01, 0.1, 1.0, 10.0, 100.0]


@pytest.fixture
def lab_config(monkeypatch, tmp_path):
    """Provide a LabConfig with a short grid and a temporary output directory."""
    monkeypatch.setenv("GEOKERNEL_LAMBDA_COUNT", "5")
    monkeypatch.setenv("GEOKERNEL_OUTPUT_DIR", str(tmp_path / "results"))
    return LabConfig()


@pytest.fixture
def k23_distances():
    """Provide the K_{2,3} path metric, a metric that is not CND."""
    return DistanceMatrix(K23_METRIC)


@pytest.fixture
def euclidean_points():
    """Provide 20 seeded points of R^3."""
    return sample_points(SpaceSpec(SpaceKind.EUCLIDEAN, dim=3), 20, seed=1)


@pytest.fixture
def make_spd(rng):
    """Provide a factory of well-conditioned random SPD matrices."""
    def make(dim):
        g = rng.standard_normal((dim, dim))
        return g.T @ g + 0.1 * np.eye(dim)
    return make


@pytest.fixture
def make_frame(rng):
    """Provide a factory of random orthonormal n x k frames."""
    def make(dim, k):
        q, _ = np.linalg.qr(rng.standard_normal((dim, k)))
        return q
    return make


@pytest.fixture
def make_unit(rng):
    """Provide a factory of random unit vectors."""
    def make(dim):
        x = rng.standard_normal(dim)
        return x / np.linalg.norm(x)
    return make
