"""Order, concentration and distance diagnostics between name tables."""

import math

import numpy as np
from scipy import stats

from name_game.core.exceptions import InvalidInputError
from name_game.population.table import NameTable


def spearman(a: NameTable, b: NameTable) -> float:
    """Spearman rank correlation of two tables over the same names.

    Without ties the exact ``1 - 6 sum(d**2) / (n (n**2 - 1))`` form is used on integer
    ranks; with ties, the Pearson correlation of average ranks. A table whose
    frequencies are all equal has no ranking and gives ``nan``.
    """
    fa, fb = a.aligned(b)
    n = len(fa)
    if n < 2:
        raise InvalidInputError("Spearman correlation needs at least 2 names", {"n": n})

    ra = stats.rankdata(fa, method="average")
    rb = stats.rankdata(fb, method="average")
    if len(np.unique(fa)) == n and len(np.unique(fb)) == n:
        d2 = int(np.sum((ra.astype(np.int64) - rb.astype(np.int64)) ** 2))
        return 1.0 - 6.0 * d2 / (n * (n * n - 1))

    ca = ra - ra.mean()
    cb = rb - rb.mean()
    denom = math.sqrt(float(np.dot(ca, ca)) * float(np.dot(cb, cb)))
    if denom == 0.0:
        return math.nan
    return float(np.dot(ca, cb)) / denom


def top_k_share(table: NameTable, k: int) -> float:
    """Total frequency of the ``k`` most popular names."""
    if not 1 <= k <= len(table):
        raise InvalidInputError(f"k must lie in 1..{len(table)}", {"k": k, "n": len(table)})
    return math.fsum(table.frequencies[:k])


def ks_distance(a: NameTable, b: NameTable, reference: NameTable | None = None) -> float:
    """Largest gap between cumulative frequencies.

    Names are accumulated in ``a``'s rank order, or in ``reference``'s when given.
    For a fixed reference order the distance is a pseudometric.
    """
    reference = reference if reference is not None else a
    _, fa = reference.aligned(a)
    _, fb = reference.aligned(b)
    return float(np.max(np.abs(np.cumsum(fa) - np.cumsum(fb))))


def tv_distance(a: NameTable, b: NameTable) -> float:
    """Total variation distance ``0.5 * sum |a - b|``."""
    fa, fb = a.aligned(b)
    return 0.5 * math.fsum(np.abs(fa - fb).tolist())
