"""Name tables: the popularity distribution over a fixed name universe at one time step."""

import math
from collections import Counter
from collections.abc import Iterable, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from name_game.core.exceptions import (
    InvalidInputError,
    NormalizationError,
    NotFoundError,
)

# Frequencies must sum to one within this tolerance once a table exists.
SUM_TOLERANCE = 1e-9
# Inputs further than this from summing to one are rejected instead of renormalized.
INPUT_SUM_TOLERANCE = 1e-3
# Sums this close to one are left alone so that tables round-trip unchanged.
RENORMALIZE_EPSILON = 1e-12


def _sort_key(pair: tuple[str, float]) -> tuple[float, str]:
    return (-pair[1], pair[0])


class NameTable(BaseModel):
    """Frequencies over names, sorted by descending frequency with ties by ascending name."""

    model_config = ConfigDict(frozen=True)

    names: tuple[str, ...]
    frequencies: tuple[float, ...]
    step_index: int = Field(default=0, ge=0)

    _positions: dict[str, int] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def validate_table(self) -> "NameTable":
        if not self.names:
            raise ValueError("A name table needs at least one name")
        if len(self.names) != len(self.frequencies):
            raise ValueError("Names and frequencies must have the same length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("Names must be unique")
        if any(not (f >= 0.0 and math.isfinite(f)) for f in self.frequencies):
            raise ValueError("Frequencies must be finite and non-negative")
        total = math.fsum(self.frequencies)
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise ValueError(f"Frequencies must sum to 1 (got {total!r})")
        pairs = list(zip(self.names, self.frequencies, strict=True))
        if pairs != sorted(pairs, key=_sort_key):
            raise ValueError("Entries must be sorted by descending frequency, then name")
        return self

    def __len__(self) -> int:
        return len(self.names)

    @property
    def entries(self) -> list[tuple[str, float]]:
        return list(zip(self.names, self.frequencies, strict=True))

    def model_post_init(self, __context: object) -> None:
        self._positions = {name: i for i, name in enumerate(self.names)}

    def freq_array(self) -> np.ndarray:
        """Frequencies in table order as a float64 array."""
        return np.asarray(self.frequencies, dtype=np.float64)

    def as_dict(self) -> dict[str, float]:
        return dict(self.entries)

    def __contains__(self, name: object) -> bool:
        return name in self._positions

    def index_of(self, name: str) -> int:
        """0-based position of ``name`` in table order."""
        try:
            return self._positions[name]
        except KeyError:
            raise NotFoundError(f"Unknown name: {name!r}", {"name": name}) from None

    def rank_of(self, name: str) -> int:
        """1-based rank of ``name`` under the table's sort order."""
        return self.index_of(name) + 1

    def freq_of(self, name: str) -> float:
        return self.frequencies[self.index_of(name)]

    def same_universe(self, other: "NameTable") -> bool:
        return set(self.names) == set(other.names)

    def aligned(self, other: "NameTable") -> tuple[np.ndarray, np.ndarray]:
        """Frequencies of both tables in this table's name order."""
        if not self.same_universe(other):
            raise InvalidInputError(
                "Tables cover different name universes",
                {"left": len(self), "right": len(other)},
            )
        theirs = np.array([other.freq_of(name) for name in self.names], dtype=np.float64)
        return self.freq_array(), theirs

    def with_step(self, step_index: int) -> "NameTable":
        return self.model_copy(update={"step_index": step_index})


def new_table(pairs: Iterable[tuple[str, float]], step_index: int = 0) -> NameTable:
    """Build a valid table, renormalizing inputs that are within 0.1% of summing to one."""
    pairs = [(str(name), float(freq)) for name, freq in pairs]
    if not pairs:
        raise InvalidInputError("Cannot build a table from an empty list")

    names = [name for name, _ in pairs]
    if len(set(names)) != len(names):
        duplicates = sorted(name for name, count in Counter(names).items() if count > 1)
        raise InvalidInputError("Duplicate names in table", {"duplicates": duplicates})

    freqs = [freq for _, freq in pairs]
    if any(not (f >= 0.0 and math.isfinite(f)) for f in freqs):
        raise InvalidInputError("Frequencies must be finite and non-negative")

    total = math.fsum(freqs)
    if abs(total - 1.0) > INPUT_SUM_TOLERANCE:
        raise NormalizationError(
            f"Frequencies sum to {total!r}, outside the accepted [0.999, 1.001]",
            {"sum": total},
        )
    if abs(total - 1.0) > RENORMALIZE_EPSILON:
        pairs = [(name, freq / total) for name, freq in pairs]

    pairs.sort(key=_sort_key)
    return NameTable(
        names=tuple(name for name, _ in pairs),
        frequencies=tuple(freq for _, freq in pairs),
        step_index=step_index,
    )


def table_from_arrays(
    names: Sequence[str], frequencies: np.ndarray | Sequence[float], step_index: int = 0
) -> NameTable:
    """Build a table from parallel name and frequency sequences."""
    return new_table(zip(names, (float(f) for f in frequencies), strict=True), step_index)


def rank_of(table: NameTable, name: str) -> int:
    return table.rank_of(name)


def freq_of(table: NameTable, name: str) -> float:
    return table.freq_of(name)
