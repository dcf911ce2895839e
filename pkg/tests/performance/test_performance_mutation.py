"""Performance benchmarks for name mutation."""

import pytest

from name_game.core.models import MutationConfig
from name_game.distributions.powerlaw import powerlaw_normalize, powerlaw_table
from name_game.mutation.edit_distance import levenshtein
from name_game.mutation.objective import CandidatePool, lambda_grid, sweep_lambda
from tests.fixtures import FIFTY_NAMES


@pytest.fixture(scope="module")
def fifty_table():
    return powerlaw_table(powerlaw_normalize(1.0, 50), FIFTY_NAMES)


@pytest.mark.performance
@pytest.mark.benchmark(group="mutation")
def test_levenshtein_speed(benchmark):
    """Benchmark edit distances between every pair of fifty names."""

    def all_pairs():
        return sum(levenshtein(a, b) for a in FIFTY_NAMES for b in FIFTY_NAMES)

    total = benchmark(all_pairs)
    assert total > 0


@pytest.mark.performance
@pytest.mark.benchmark(group="mutation")
def test_candidate_pool_build_speed(benchmark, fifty_table):
    """Benchmark enumerating one-edit candidates for fifty names."""
    pool = benchmark(CandidatePool.build, fifty_table, MutationConfig())
    assert len(pool.candidates) == len(pool.bases) > 50


@pytest.mark.performance
@pytest.mark.benchmark(group="mutation")
def test_lambda_sweep_speed(benchmark, fifty_table):
    """Benchmark a twenty-point penalty sweep."""
    grid = lambda_grid(1e-4, 10.0, 20)

    frame = benchmark(sweep_lambda, fifty_table, 0.002, MutationConfig(), grid)
    assert len(frame) == 20
