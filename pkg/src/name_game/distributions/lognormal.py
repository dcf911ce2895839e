"""Log-normal parental preference laws: sampling and discretization."""

import numpy as np
from scipy import stats

from name_game.core.exceptions import InvalidDomainError
from name_game.core.models import DiscretePrefMass, LogNormalParams
from name_game.distributions.powerlaw import mass_from_arrays


def default_floor(population_size: int) -> float:
    """Smallest meaningful popularity: one tenth of a person."""
    if population_size < 1:
        raise InvalidDomainError(
            "Population size must be at least 1", {"population_size": population_size}
        )
    return 1.0 / (10.0 * population_size)


def sample_preferences(params: LogNormalParams, n: int, seed: int) -> np.ndarray:
    """Draw ``n`` desired popularities, clamped into ``[floor, 1]``.

    The draw is a pure function of ``(params, n, seed)``: one PCG64 stream per seed,
    consumed sequentially.
    """
    if n < 0:
        raise InvalidDomainError("Sample size must be non-negative", {"n": n})
    if n == 0:
        return np.empty(0, dtype=np.float64)
    rng = np.random.default_rng(seed)
    values = rng.lognormal(mean=params.log_mean, sigma=params.sigma, size=n)
    return np.clip(values, params.floor, 1.0)


def lognormal_pref_mass(params: LogNormalParams, n_bins: int) -> DiscretePrefMass:
    """Discretize the clamped log-normal law onto ``n_bins`` log-spaced points in ``[floor, 1]``.

    Each point takes the probability between the geometric midpoints to its neighbours.
    The tails below ``floor`` and above 1 fold into the end points, matching the clamp
    applied by :func:`sample_preferences`.
    """
    if n_bins < 1:
        raise InvalidDomainError("Need at least one preference bin", {"n_bins": n_bins})
    if n_bins == 1 or params.floor >= 1.0:
        return DiscretePrefMass(pairs=((params.floor, 1.0),))

    mus = np.geomspace(params.floor, 1.0, n_bins)
    inner_edges = np.sqrt(mus[:-1] * mus[1:])
    law = stats.lognorm(s=params.sigma, scale=np.exp(params.log_mean))
    cdf = np.concatenate(([0.0], law.cdf(inner_edges), [1.0]))
    masses = np.clip(np.diff(cdf), 0.0, None)
    return mass_from_arrays(mus, masses)


def sample_pref_mass(mass: DiscretePrefMass, n: int, seed: int) -> np.ndarray:
    """Draw ``n`` desired popularities from the atoms of a discrete preference mass."""
    if n < 0:
        raise InvalidDomainError("Sample size must be non-negative", {"n": n})
    if n == 0:
        return np.empty(0, dtype=np.float64)
    rng = np.random.default_rng(seed)
    return rng.choice(mass.mus, size=n, p=mass.masses)
