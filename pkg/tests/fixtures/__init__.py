"""Shared test fixtures and data for name-game tests."""

from .samples import (
    FIFTY_NAMES,
    MALFORMED_SSA,
    SSA_SAMPLE,
    THREE_NAMES,
    TWO_NAMES,
    random_unique_table,
)

__all__ = [
    "FIFTY_NAMES",
    "MALFORMED_SSA",
    "SSA_SAMPLE",
    "THREE_NAMES",
    "TWO_NAMES",
    "random_unique_table",
]
