"""Array-backed per-parent outcomes of a naming step."""

from collections.abc import Iterable, Sequence
from typing import overload

import numpy as np

from name_game.core.exceptions import InvalidInputError
from name_game.core.models import ParentOutcome


class ParentOutcomes(Sequence[ParentOutcome]):
    """Outcomes of every parent in one step, stored column-wise.

    ``chosen`` holds indices into ``names``. Items are materialized as
    :class:`ParentOutcome` only on access.
    """

    __slots__ = ("achieved", "chosen", "desired", "names")

    def __init__(
        self,
        names: Sequence[str],
        desired: np.ndarray,
        chosen: np.ndarray,
        achieved: np.ndarray,
    ) -> None:
        if not len(desired) == len(chosen) == len(achieved):
            raise InvalidInputError(
                "Outcome columns must have equal length",
                {"desired": len(desired), "chosen": len(chosen), "achieved": len(achieved)},
            )
        self.names = tuple(names)
        self.desired = np.asarray(desired, dtype=np.float64)
        self.chosen = np.asarray(chosen, dtype=np.int64)
        self.achieved = np.asarray(achieved, dtype=np.float64)

    @classmethod
    def from_outcomes(cls, outcomes: Iterable[ParentOutcome]) -> "ParentOutcomes":
        if isinstance(outcomes, ParentOutcomes):
            return outcomes
        items = list(outcomes)
        names = sorted({o.chosen for o in items})
        index = {name: i for i, name in enumerate(names)}
        return cls(
            names,
            np.array([o.desired for o in items], dtype=np.float64),
            np.array([index[o.chosen] for o in items], dtype=np.int64),
            np.array([o.achieved for o in items], dtype=np.float64),
        )

    @classmethod
    def concat(cls, parts: Sequence["ParentOutcomes"]) -> "ParentOutcomes":
        """Join outcomes of several steps, re-indexing chosen names when their orders differ."""
        if not parts:
            return cls((), np.empty(0), np.empty(0, dtype=np.int64), np.empty(0))
        names = parts[0].names
        if all(part.names == names for part in parts):
            chosen = np.concatenate([part.chosen for part in parts])
        else:
            names = tuple(sorted(set().union(*(part.names for part in parts))))
            index = {name: i for i, name in enumerate(names)}
            chosen = np.concatenate(
                [
                    np.array([index[n] for n in part.names], dtype=np.int64)[part.chosen]
                    for part in parts
                ]
            )
        return cls(
            names,
            np.concatenate([part.desired for part in parts]),
            chosen,
            np.concatenate([part.achieved for part in parts]),
        )

    def __len__(self) -> int:
        return len(self.desired)

    @overload
    def __getitem__(self, index: int) -> ParentOutcome: ...

    @overload
    def __getitem__(self, index: slice) -> "ParentOutcomes": ...

    def __getitem__(self, index: int | slice) -> "ParentOutcome | ParentOutcomes":
        if isinstance(index, slice):
            return ParentOutcomes(
                self.names, self.desired[index], self.chosen[index], self.achieved[index]
            )
        return ParentOutcome(
            desired=float(self.desired[index]),
            chosen=self.names[int(self.chosen[index])],
            achieved=float(self.achieved[index]),
        )

    def chosen_names(self) -> list[str]:
        return [self.names[i] for i in self.chosen.tolist()]

    def __repr__(self) -> str:
        return f"ParentOutcomes(n={len(self)}, names={len(self.names)})"
