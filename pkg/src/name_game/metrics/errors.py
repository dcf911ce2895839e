"""Parent error measures and their histograms."""

from collections.abc import Sequence
from pathlib import Path

import numpy as np
import pandas as pd
import structlog

from name_game.core.exceptions import InvalidDomainError, InvalidInputError, UndefinedRatioError
from name_game.core.models import ErrorTriple, Histogram, HistogramScale, ParentOutcome
from name_game.population.outcomes import ParentOutcomes
from name_game.population.serialization import FLOAT_FORMAT

logger = structlog.get_logger(__name__)

MEASURES = ("ratio", "absdiff", "relerror")


def parent_error(desired: float, achieved: float) -> ErrorTriple:
    """Ratio, absolute difference and relative error of an achieved popularity."""
    if desired == 0.0:
        raise UndefinedRatioError("Error ratios are undefined for zero desired popularity")
    if desired < 0.0 or achieved < 0.0:
        raise InvalidDomainError(
            "Popularities must be non-negative", {"desired": desired, "achieved": achieved}
        )
    absdiff = abs(achieved - desired)
    return ErrorTriple(ratio=achieved / desired, absdiff=absdiff, relerror=absdiff / desired)


def error_arrays(outcomes: Sequence[ParentOutcome]) -> dict[str, np.ndarray]:
    """Vectorized error measures for outcomes with positive desired popularity."""
    table = ParentOutcomes.from_outcomes(outcomes)
    defined = table.desired > 0.0
    skipped = int((~defined).sum())
    if skipped:
        logger.warning("Skipping outcomes with zero desired popularity", skipped=skipped)
    desired = table.desired[defined]
    achieved = table.achieved[defined]
    absdiff = np.abs(achieved - desired)
    return {"ratio": achieved / desired, "absdiff": absdiff, "relerror": absdiff / desired}


def make_edges(
    low: float, high: float, bins: int, scale: HistogramScale = HistogramScale.LINEAR
) -> np.ndarray:
    """``bins + 1`` ascending edges between ``low`` and ``high``."""
    if bins < 1:
        raise InvalidInputError("Need at least one bin", {"bins": bins})
    if not low < high:
        raise InvalidInputError("Edges need low < high", {"low": low, "high": high})
    if scale is HistogramScale.LOG:
        if low <= 0.0:
            raise InvalidInputError("Log-scale edges need low > 0", {"low": low})
        return np.geomspace(low, high, bins + 1)
    return np.linspace(low, high, bins + 1)


def auto_edges(values: np.ndarray, bins: int, scale: HistogramScale) -> np.ndarray:
    """Edges spanning the data; zeros on a log scale fall into the first bin."""
    usable = values[values > 0.0] if scale is HistogramScale.LOG else values
    if usable.size == 0:
        low, high = (1e-12, 1.0) if scale is HistogramScale.LOG else (0.0, 1.0)
    else:
        low, high = float(usable.min()), float(usable.max())
    if not low < high:
        high = low * 10.0 if scale is HistogramScale.LOG else low + 1.0
    return make_edges(low, high, bins, scale)


def histogram(
    values: np.ndarray,
    edges: Sequence[float] | np.ndarray,
    scale: HistogramScale = HistogramScale.LINEAR,
) -> Histogram:
    """Bin values; anything outside the edges lands in the nearest end bin."""
    edges = np.asarray(edges, dtype=np.float64)
    if edges.ndim != 1 or len(edges) < 2 or np.any(np.diff(edges) <= 0.0):
        raise InvalidInputError("Histogram edges must be strictly ascending with >= 2 entries")
    n_bins = len(edges) - 1
    index = np.clip(np.searchsorted(edges, values, side="right") - 1, 0, n_bins - 1)
    counts = np.bincount(index, minlength=n_bins)
    return Histogram(
        edges=tuple(edges.tolist()), counts=tuple(int(c) for c in counts), scale=scale
    )


def error_histogram(
    outcomes: Sequence[ParentOutcome],
    edges: Sequence[float] | np.ndarray,
    scale: HistogramScale = HistogramScale.LINEAR,
) -> dict[str, Histogram]:
    """One histogram per error measure, all on the same edges."""
    arrays = error_arrays(outcomes)
    return {measure: histogram(arrays[measure], edges, scale) for measure in MEASURES}


def error_frame(outcomes: Sequence[ParentOutcome]) -> pd.DataFrame:
    """Per-parent desired, chosen and achieved popularity with the three error measures."""
    table = ParentOutcomes.from_outcomes(outcomes)
    with np.errstate(divide="ignore", invalid="ignore"):
        absdiff = np.abs(table.achieved - table.desired)
        ratio = np.where(table.desired > 0.0, table.achieved / table.desired, np.nan)
        relerror = np.where(table.desired > 0.0, absdiff / table.desired, np.nan)
    return pd.DataFrame(
        {
            "desired": table.desired,
            "chosen": table.chosen_names(),
            "achieved": table.achieved,
            "ratio": ratio,
            "absdiff": absdiff,
            "relerror": relerror,
        }
    )


def histogram_to_frame(hist: Histogram) -> pd.DataFrame:
    return pd.DataFrame(
        {"bin_low": hist.edges[:-1], "bin_high": hist.edges[1:], "count": hist.counts}
    )


def write_histogram(hist: Histogram, path: Path | str) -> Path:
    """Write ``bin_low,bin_high,count`` CSV."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(
        histogram_to_frame(hist).to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    )
    return path
