"""Integration tests for error measures, name mutation and list statistics."""

import string
from functools import cache

import numpy as np
import pytest

from name_game.core.models import ListStats, MutationConfig, ParentOutcome
from name_game.distributions.powerlaw import powerlaw_normalize, powerlaw_table
from name_game.ingestion.list_stats import name_list_stats, welch_t_test
from name_game.metrics.errors import error_arrays, parent_error
from name_game.mutation.edit_distance import levenshtein
from name_game.mutation.objective import choose_mutated_name, lambda_grid, sweep_lambda
from tests.fixtures import FIFTY_NAMES


@cache
def _brute_force_distance(a: str, b: str) -> int:
    if not a or not b:
        return len(a) + len(b)
    return min(
        _brute_force_distance(a[1:], b) + 1,
        _brute_force_distance(a, b[1:]) + 1,
        _brute_force_distance(a[1:], b[1:]) + (a[0] != b[0]),
    )


class TestErrorIdentities:
    """Ratio, absolute difference and relative error agree with each other."""

    def test_random_pairs(self, rng):
        """Test the identities over many random outcomes."""
        desired = rng.uniform(1e-4, 1.0, 10_000)
        achieved = rng.uniform(0.0, 1.0, 10_000)
        outcomes = [
            ParentOutcome(desired=float(d), chosen="x", achieved=float(a))
            for d, a in zip(desired, achieved, strict=True)
        ]
        arrays = error_arrays(outcomes)

        np.testing.assert_allclose(arrays["ratio"], achieved / desired, rtol=1e-12, atol=1e-12)
        np.testing.assert_allclose(
            arrays["relerror"], np.abs(arrays["ratio"] - 1.0), rtol=1e-12, atol=1e-12
        )
        np.testing.assert_allclose(
            arrays["absdiff"], desired * arrays["relerror"], rtol=1e-12, atol=1e-12
        )

    def test_scalar_matches_vectorized(self, rng):
        """Test the per-parent triple equals the array form."""
        for d, a in rng.uniform(1e-3, 1.0, (200, 2)):
            triple = parent_error(float(d), float(a))
            assert triple.ratio == pytest.approx(a / d, rel=1e-12)
            expected = abs(triple.ratio - 1.0)
            assert triple.relerror == pytest.approx(expected, rel=1e-12, abs=1e-12)


class TestMutation:
    """Penalized mutation on a fixed fifty-name table."""

    @pytest.fixture
    def table(self):
        return powerlaw_table(powerlaw_normalize(1.0, 50), FIFTY_NAMES)

    @pytest.mark.parametrize("mu", [0.0, 0.001, 0.004, 0.03])
    def test_distance_falls_as_penalty_grows(self, table, mu):
        """Test a larger edit penalty never picks a more distant name."""
        frame = sweep_lambda(table, mu, MutationConfig(), lambda_grid(1e-4, 10.0, 20))
        distances = frame["distance"].tolist()
        assert len(distances) == 20
        assert all(b <= a for a, b in zip(distances, distances[1:], strict=False))
        assert distances[-1] == 0

    def test_free_edits_give_novel_name(self, table):
        """Test parents wanting a unique name get a new one at no cost."""
        choice = choose_mutated_name(table, 0.0, MutationConfig(lambda_=0.0))
        assert choice.novel
        assert choice.cost == 0.0
        assert choice.candidate not in table

    def test_levenshtein_against_brute_force(self, rng):
        """Test the dynamic program on random short strings."""
        letters = list(string.ascii_lowercase[:4])
        for _ in range(1000):
            a = "".join(rng.choice(letters, size=int(rng.integers(0, 7))))
            b = "".join(rng.choice(letters, size=int(rng.integers(0, 7))))
            assert levenshtein(a, b) == _brute_force_distance(a, b)


class TestWelch:
    """Welch's t-test on summary statistics."""

    def test_unit_gap(self):
        """Test two ten-element unit-variance samples a unit apart."""
        result = welch_t_test(
            ListStats(mean=1.0, std=1.0, n=10), ListStats(mean=0.0, std=1.0, n=10)
        )
        assert result.t == pytest.approx(2.236, abs=1e-3)
        assert result.df == pytest.approx(18.0, abs=1e-3)

    def test_identical_lists(self, small_zipf_table):
        """Test a name list compared with itself gives t = 0 and p = 1."""
        names = list(small_zipf_table.names[:10])
        a = name_list_stats(small_zipf_table, names)
        result = welch_t_test(a, name_list_stats(small_zipf_table, names))
        assert result.t == 0.0
        assert result.p == pytest.approx(1.0)
