"""Discrete rank power laws ``f(a) = K * a**-t`` and power-law preference masses."""

import math
from collections.abc import Sequence

import numpy as np
from scipy.special import logsumexp

from name_game.core.exceptions import InvalidDomainError, InvalidInputError
from name_game.core.models import DiscretePrefMass, PowerLawParams
from name_game.population.table import NameTable, new_table


def _log_weights(t: float, n_ranks: int) -> np.ndarray:
    return -t * np.log(np.arange(1, n_ranks + 1, dtype=np.float64))


def powerlaw_normalize(t: float, n_ranks: int) -> PowerLawParams:
    """Compute the discrete normalization constant ``K = 1 / sum(a**-t)`` over ``1..n_ranks``.

    The sum is taken in log space so steep exponents neither overflow nor underflow.
    """
    if n_ranks < 1:
        raise InvalidDomainError("A power law needs at least one rank", {"n_ranks": n_ranks})
    if not math.isfinite(t):
        raise InvalidDomainError("Power-law exponent must be finite", {"t": t})
    log_k = -float(logsumexp(_log_weights(t, n_ranks)))
    return PowerLawParams(t=t, n_ranks=n_ranks, k=math.exp(log_k), log_k=log_k)


def powerlaw_pmf(params: PowerLawParams, rank: int) -> float:
    """Probability of the name at ``rank``."""
    if not 1 <= rank <= params.n_ranks:
        raise InvalidDomainError(
            f"Rank {rank} outside 1..{params.n_ranks}",
            {"rank": rank, "n_ranks": params.n_ranks},
        )
    return math.exp(params.log_k - params.t * math.log(rank))


def powerlaw_pmf_array(params: PowerLawParams) -> np.ndarray:
    """Probabilities of ranks ``1..n_ranks`` as an array."""
    return np.exp(params.log_k + _log_weights(params.t, params.n_ranks))


def default_labels(n_ranks: int) -> list[str]:
    """Synthetic name labels whose ascending order matches rank order."""
    width = max(4, len(str(n_ranks)))
    return [f"name_{i:0{width}d}" for i in range(1, n_ranks + 1)]


def powerlaw_table(
    params: PowerLawParams,
    name_labels: Sequence[str] | None = None,
    step_index: int = 0,
) -> NameTable:
    """Materialize a power law as a table; the i-th label gets ``powerlaw_pmf(params, i)``."""
    labels = list(name_labels) if name_labels is not None else default_labels(params.n_ranks)
    if len(labels) != params.n_ranks:
        raise InvalidInputError(
            f"Expected {params.n_ranks} labels, got {len(labels)}",
            {"expected": params.n_ranks, "got": len(labels)},
        )
    if len(set(labels)) != len(labels):
        raise InvalidInputError("Name labels must be distinct")
    return new_table(zip(labels, powerlaw_pmf_array(params).tolist(), strict=True), step_index)


def powerlaw_pref_mass(t_prime: float, floor: float, n_bins: int) -> DiscretePrefMass:
    """Discretize the preference power law ``g(mu) ~ mu**-t_prime`` on ``[floor, 1]``.

    Points are log-spaced, so every point owns an equal share of the log axis and its
    mass is proportional to ``mu**-t_prime``. ``t_prime > 0`` favours uncommon names.
    """
    if not 0.0 < floor < 1.0:
        raise InvalidDomainError("Preference floor must lie in (0, 1)", {"floor": floor})
    if n_bins < 1:
        raise InvalidDomainError("Need at least one preference bin", {"n_bins": n_bins})
    mus = np.geomspace(floor, 1.0, n_bins)
    log_mass = -t_prime * np.log(mus)
    masses = np.exp(log_mass - logsumexp(log_mass))
    return mass_from_arrays(mus, masses)


def mass_from_arrays(mus: np.ndarray, masses: np.ndarray) -> DiscretePrefMass:
    """Build a preference mass from parallel arrays, renormalizing to an exact unit sum."""
    total = math.fsum(masses.tolist())
    return DiscretePrefMass(
        pairs=tuple(
            (float(mu), float(p) / total) for mu, p in zip(mus, masses, strict=True)
        )
    )
