"""Pytest configuration and shared fixtures."""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))
sys.path.insert(0, str(project_root / "src"))

from name_game.core.config import SimulationSettings  # noqa: E402
from name_game.distributions.powerlaw import powerlaw_normalize, powerlaw_table  # noqa: E402
from name_game.population.table import NameTable, new_table  # noqa: E402
from tests.fixtures import SSA_SAMPLE, THREE_NAMES, TWO_NAMES  # noqa: E402

try:
    from xdist.scheduler import LoadGroupScheduling
except ImportError:
    LoadGroupScheduling = None


@pytest.fixture
def settings():
    """Provide default simulation settings."""
    return SimulationSettings()


@pytest.fixture
def two_name_table() -> NameTable:
    """{A: 0.6, B: 0.4}."""
    return new_table(TWO_NAMES)


@pytest.fixture
def three_name_table() -> NameTable:
    """{A: 0.5, B: 0.3, C: 0.2}."""
    return new_table(THREE_NAMES)


@pytest.fixture
def zipf_table() -> NameTable:
    """Power law t=1 over 1000 synthetic names."""
    return powerlaw_table(powerlaw_normalize(1.0, 1000))


@pytest.fixture
def small_zipf_table() -> NameTable:
    """Power law t=1 over 50 synthetic names."""
    return powerlaw_table(powerlaw_normalize(1.0, 50))


@pytest.fixture
def ssa_file(tmp_path) -> Path:
    """A small SSA-format file on disk."""
    path = tmp_path / "yob2010.txt"
    path.write_text(SSA_SAMPLE)
    return path


@pytest.fixture
def table_csv(tmp_path, small_zipf_table) -> Path:
    """The 50-name power-law table written as CSV."""
    from name_game.population.serialization import write_table

    return write_table(small_zipf_table, tmp_path / "table.csv")


@pytest.fixture
def rng():
    """Seeded generator for randomized tests."""
    return np.random.default_rng(20240401)


# Pytest configuration hooks
def pytest_configure(config):
    """Configure pytest with custom settings."""
    config.addinivalue_line("markers", "unit: mark test as a unit test")
    config.addinivalue_line("markers", "integration: mark test as an integration test")
    config.addinivalue_line("markers", "performance: mark test as a performance test")
    config.addinivalue_line("markers", "slow: mark test as slow running")
    config.addinivalue_line("markers", "serial: mark test to run serially (not in parallel)")

    if not hasattr(config, "workerinput"):
        config.option.dist = getattr(config.option, "dist", "loadgroup")


def pytest_collection_modifyitems(config, items):
    """Modify test collection to add markers based on test location."""
    for item in items:
        if "test_performance" in str(item.fspath):
            item.add_marker(pytest.mark.performance)
            item.add_marker(pytest.mark.serial)

        if "integration" in str(item.fspath):
            item.add_marker(pytest.mark.integration)


def pytest_xdist_make_scheduler(config, log):
    """Custom scheduler for distributing tests across workers."""
    if LoadGroupScheduling:
        return LoadGroupScheduling(config, log)
    return None
