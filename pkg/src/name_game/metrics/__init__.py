"""Parent error measures, rank correlation, concentration and distances."""

from name_game.metrics.errors import (
    MEASURES,
    auto_edges,
    error_arrays,
    error_frame,
    error_histogram,
    histogram,
    histogram_to_frame,
    make_edges,
    parent_error,
    write_histogram,
)
from name_game.metrics.ranking import ks_distance, spearman, top_k_share, tv_distance

__all__ = [
    "MEASURES",
    "auto_edges",
    "error_arrays",
    "error_frame",
    "error_histogram",
    "histogram",
    "histogram_to_frame",
    "ks_distance",
    "make_edges",
    "parent_error",
    "spearman",
    "top_k_share",
    "tv_distance",
    "write_histogram",
]
