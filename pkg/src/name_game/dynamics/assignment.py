"""Myopic name assignment: every parent takes the name closest to their desired popularity."""

import numpy as np

from name_game.core.exceptions import InvalidDomainError
from name_game.population.table import NameTable


def _check_mu(mu: float) -> None:
    if not 0.0 <= mu <= 1.0:
        raise InvalidDomainError("Desired popularity must lie in [0, 1]", {"mu": mu})


def assign_name(table: NameTable, mu: float) -> set[str]:
    """All names minimizing ``|f(a) - mu|`` by exhaustive scan."""
    _check_mu(mu)
    distances = [abs(f - mu) for f in table.frequencies]
    best = min(distances)
    return {name for name, d in zip(table.names, distances, strict=True) if d == best}


class NameAssigner:
    """Vectorized nearest-frequency lookup over a fixed table.

    Name positions are grouped by distinct frequency in ascending order. A desired
    popularity maps to a contiguous span of that grouping: one frequency group, or
    two neighbouring groups when it lies exactly halfway between them. Within a group
    names keep the table's ascending-name order.
    """

    def __init__(self, table: NameTable) -> None:
        self.table = table
        freqs = table.freq_array()
        self.members = np.argsort(freqs, kind="stable")
        self.values, self.starts, counts = np.unique(
            freqs[self.members], return_index=True, return_counts=True
        )
        self.stops = self.starts + counts

    def __len__(self) -> int:
        return len(self.table)

    def spans(self, mus: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Half-open ``[begin, end)`` ranges into :attr:`members` of the tied argmin names."""
        mus = np.asarray(mus, dtype=np.float64)
        if mus.size and (mus.min() < 0.0 or mus.max() > 1.0):
            raise InvalidDomainError("Desired popularities must lie in [0, 1]")
        last = len(self.values) - 1
        above = np.searchsorted(self.values, mus, side="left")
        left = np.clip(above - 1, 0, last)
        right = np.clip(above, 0, last)
        d_left = np.abs(self.values[left] - mus)
        d_right = np.abs(self.values[right] - mus)
        low_group = np.where(d_left <= d_right, left, right)
        high_group = np.where(d_right <= d_left, right, left)
        return self.starts[low_group], self.stops[high_group]

    def names_for(self, mu: float) -> set[str]:
        """Scalar view of :meth:`spans`, equal to :func:`assign_name`."""
        _check_mu(mu)
        begin, end = self.spans(np.array([mu]))
        return {self.table.names[i] for i in self.members[begin[0] : end[0]].tolist()}

    def flow(self, mus: np.ndarray, masses: np.ndarray) -> np.ndarray:
        """Inflow per table position when each mass is split equally over its tied names."""
        begin, end = self.spans(mus)
        masses = np.asarray(masses, dtype=np.float64)
        width = end - begin
        single = width == 1
        inflow = np.zeros(len(self), dtype=np.float64)
        np.add.at(inflow, self.members[begin[single]], masses[single])
        for b, e, p in zip(
            begin[~single].tolist(), end[~single].tolist(), masses[~single].tolist(), strict=True
        ):
            np.add.at(inflow, self.members[b:e], p / (e - b))
        return inflow

    def pick(
        self, begin: np.ndarray, end: np.ndarray, uniforms: np.ndarray | None = None
    ) -> np.ndarray:
        """Table position chosen within each span; ties use ``uniforms`` in ``[0, 1)``."""
        width = end - begin
        offset = np.zeros_like(begin)
        tied = width > 1
        if tied.any():
            if uniforms is None:
                raise InvalidDomainError("Tied assignments need tie-break uniforms")
            offset[tied] = np.minimum(
                (uniforms[tied] * width[tied]).astype(np.int64), width[tied] - 1
            )
        return self.members[begin + offset]
