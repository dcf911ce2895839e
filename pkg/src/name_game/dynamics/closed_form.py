"""Closed-form composition of a rank power law with a power-law preference.

Parents with preference ``g(mu) ~ mu**-t_prime`` facing ``f(a) ~ a**-t`` produce
``f'(a) ~ a**(t * t_prime)``, i.e. a power law with exponent ``-t * t_prime``.
"""

from collections.abc import Sequence

from name_game.core.exceptions import InvalidDomainError
from name_game.core.models import PowerLawParams
from name_game.distributions.powerlaw import default_labels, powerlaw_normalize, powerlaw_table
from name_game.population.table import NameTable


def closed_form_step(params: PowerLawParams, t_prime: float) -> PowerLawParams:
    """One composition step: exponent ``-t * t_prime``, ranks preserved, renormalized."""
    return powerlaw_normalize(-params.t * t_prime, params.n_ranks)


def closed_form_iterate(params: PowerLawParams, t_prime: float, n: int) -> list[PowerLawParams]:
    """``n + 1`` laws; the k-th has exponent ``t * (-t_prime)**k``."""
    if n < 0:
        raise InvalidDomainError("Iteration count must be non-negative", {"n": n})
    laws = [params]
    for _ in range(n):
        laws.append(closed_form_step(laws[-1], t_prime))
    return laws


def closed_form_table(
    params: PowerLawParams,
    labels: Sequence[str] | None = None,
    step_index: int = 0,
) -> NameTable:
    """Materialize a closed-form iterate; rank ``i`` always belongs to ``labels[i - 1]``."""
    return powerlaw_table(params, labels, step_index)


def closed_form_tables(
    params: PowerLawParams,
    t_prime: float,
    n: int,
    labels: Sequence[str] | None = None,
) -> list[NameTable]:
    """Tables of every closed-form iterate over a shared label set."""
    labels = list(labels) if labels is not None else default_labels(params.n_ranks)
    return [
        closed_form_table(law, labels, step_index=k)
        for k, law in enumerate(closed_form_iterate(params, t_prime, n))
    ]
