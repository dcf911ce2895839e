"""Least-squares power-law fits on log-log rank/frequency data."""

from collections.abc import Sequence

import numpy as np
import structlog
from scipy import stats

from name_game.core.exceptions import InsufficientDataError, InvalidInputError
from name_game.core.models import PowerLawFit
from name_game.population.table import NameTable

logger = structlog.get_logger(__name__)


def rank_frequency(
    table: NameTable, labels: Sequence[str] | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Ranks (1-based) and frequencies, ranked by ``labels`` order or by the table's own order."""
    if labels is None:
        freqs = table.freq_array()
    else:
        if len(labels) != len(table) or set(labels) != set(table.names):
            raise InvalidInputError(
                "Rank labels must be a permutation of the table's names",
                {"labels": len(labels), "names": len(table)},
            )
        freqs = np.array([table.freq_of(name) for name in labels], dtype=np.float64)
    return np.arange(1, len(freqs) + 1, dtype=np.float64), freqs


def fit_powerlaw(
    table: NameTable,
    labels: Sequence[str] | None = None,
    min_rank: int = 1,
    max_rank: int | None = None,
) -> PowerLawFit:
    """Fit ``log f = log k - t log rank`` over positive-frequency entries.

    Args:
        table: Table to fit.
        labels: Optional name order defining ranks. Defaults to the table's
            descending-frequency order.
        min_rank: First rank included in the regression.
        max_rank: Last rank included (inclusive); ``None`` keeps all.

    Returns:
        The fitted exponent, constant and coefficient of determination.
    """
    ranks, freqs = rank_frequency(table, labels)
    keep = (freqs > 0.0) & (ranks >= min_rank)
    if max_rank is not None:
        keep &= ranks <= max_rank
    if int(keep.sum()) < 2:
        raise InsufficientDataError(
            "Power-law fit needs at least 2 positive-frequency entries",
            {"positive": int(keep.sum()), "min_rank": min_rank, "max_rank": max_rank},
        )

    x = np.log(ranks[keep])
    y = np.log(freqs[keep])
    result = stats.linregress(x, y)
    residuals = y - (result.intercept + result.slope * x)
    ss_res = float(np.dot(residuals, residuals))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0.0 else min(1.0, max(0.0, 1.0 - ss_res / ss_tot))

    fit = PowerLawFit(
        t_hat=-float(result.slope),
        k_hat=float(np.exp(result.intercept)),
        r2=r2,
        n_points=int(keep.sum()),
    )
    logger.debug("Fitted power law", t_hat=fit.t_hat, r2=fit.r2, n_points=fit.n_points)
    return fit
