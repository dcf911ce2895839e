"""Popularity statistics of name lists and Welch's t-test between lists."""

import math
from collections.abc import Sequence

import numpy as np
import structlog
from scipy import stats

from name_game.core.exceptions import DegenerateInputError, InvalidInputError
from name_game.core.models import ListStats, WelchResult
from name_game.population.table import NameTable

logger = structlog.get_logger(__name__)


def name_list_stats(
    table: NameTable, names: Sequence[str], *, casefold: bool = False
) -> ListStats:
    """Mean and sample standard deviation of the listed names' frequencies.

    Names absent from the table count as frequency 0. A single name has std 0.
    With ``casefold`` names match case-insensitively.
    """
    if not names:
        raise InvalidInputError("Name list must not be empty")

    if casefold:
        lookup: dict[str, float] = {}
        for name, freq in table.entries:
            key = name.casefold()
            lookup[key] = lookup.get(key, 0.0) + freq
        keys = [name.casefold() for name in names]
    else:
        lookup = table.as_dict()
        keys = list(names)

    missing = [name for name, key in zip(names, keys, strict=True) if key not in lookup]
    if missing:
        logger.warning("Names missing from table", missing=len(missing), names=missing[:10])

    values = np.array([lookup.get(key, 0.0) for key in keys], dtype=np.float64)
    std = float(np.std(values, ddof=1)) if len(values) > 1 else 0.0
    return ListStats(mean=float(np.mean(values)), std=std, n=len(values), missing=len(missing))


def welch_t_test(a: ListStats, b: ListStats) -> WelchResult:
    """Welch's unequal-variance t-test from summary statistics.

    Returns the t statistic, the Welch-Satterthwaite degrees of freedom and the
    two-sided p-value from the Student t survival function.
    """
    if a.n < 2 or b.n < 2:
        raise InvalidInputError("Welch's test needs n >= 2 on both sides", {"a": a.n, "b": b.n})

    va = a.std**2 / a.n
    vb = b.std**2 / b.n
    pooled = va + vb
    if pooled == 0.0:
        if a.mean != b.mean:
            raise DegenerateInputError(
                "Both variances are zero and the means differ",
                {"mean_a": a.mean, "mean_b": b.mean},
            )
        return WelchResult(t=0.0, df=float(a.n + b.n - 2), p=1.0)

    t_stat = (a.mean - b.mean) / math.sqrt(pooled)
    df = pooled**2 / (va**2 / (a.n - 1) + vb**2 / (b.n - 1))
    p = float(min(1.0, 2.0 * stats.t.sf(abs(t_stat), df)))
    return WelchResult(t=t_stat, df=df, p=p)
