"""Penalized name mutation: trade popularity mismatch against edit distance.

A parent wanting popularity ``mu`` may coin a variant ``candidate`` of an established
name ``base`` at cost ``|freq(candidate) - mu| + lambda * d(base, candidate)``. Names
not in the table are assumed to have popularity 0.
"""

from collections.abc import Iterable, Sequence

import numpy as np
import pandas as pd
import structlog
from pydantic import BaseModel, ConfigDict

from name_game.core.exceptions import InvalidDomainError, InvalidInputError
from name_game.core.models import MutationChoice, MutationConfig
from name_game.mutation.edit_distance import levenshtein, single_edits
from name_game.population.table import NameTable

logger = structlog.get_logger(__name__)


def _initial_alphabet(base: str, config: MutationConfig) -> str | None:
    if config.capitalize_initial and base[:1].isupper():
        return "".join(dict.fromkeys(config.alphabet + config.alphabet.upper()))
    return None


def generate_candidates(base: str, config: MutationConfig) -> set[str]:
    """All strings within ``max_edits`` edits of ``base``, ``base`` included."""
    if not base:
        raise InvalidInputError("Base name must not be empty")
    initial = _initial_alphabet(base, config)
    seen = {base}
    frontier = {base}
    for _ in range(config.max_edits):
        frontier = {
            edit
            for word in frontier
            for edit in single_edits(word, config.alphabet, initial)
        } - seen
        seen |= frontier
    return seen


def mutation_cost(
    candidate: str, base: str, mu: float, lambda_: float, assumed_freq: float
) -> float:
    """``|assumed_freq - mu| + lambda * levenshtein(base, candidate)``."""
    if lambda_ < 0.0:
        raise InvalidDomainError("Penalty weight must be non-negative", {"lambda": lambda_})
    return abs(assumed_freq - mu) + lambda_ * levenshtein(base, candidate)


class CandidatePool(BaseModel):
    """Every (base, candidate) pair of a table, enumerated once."""

    model_config = ConfigDict(frozen=True)

    bases: tuple[str, ...]
    candidates: tuple[str, ...]
    distances: tuple[int, ...]
    freqs: tuple[float, ...]

    @classmethod
    def build(cls, table: NameTable, config: MutationConfig) -> "CandidatePool":
        bases: list[str] = []
        candidates: list[str] = []
        distances: list[int] = []
        freqs: list[float] = []
        for base in table.names:
            for candidate in sorted(generate_candidates(base, config)):
                bases.append(base)
                candidates.append(candidate)
                distances.append(levenshtein(base, candidate))
                freqs.append(table.freq_of(candidate) if candidate in table else 0.0)
        logger.debug("Enumerated mutation candidates", bases=len(table), pairs=len(candidates))
        return cls(
            bases=tuple(bases),
            candidates=tuple(candidates),
            distances=tuple(distances),
            freqs=tuple(freqs),
        )

    def best(self, table: NameTable, mu: float, lambda_: float) -> MutationChoice:
        """Minimum cost; ties go to smaller distance, then candidate, then base name."""
        if lambda_ < 0.0:
            raise InvalidDomainError("Penalty weight must be non-negative", {"lambda": lambda_})
        cost, distance, candidate, base = min(
            (abs(f - mu) + lambda_ * d, d, c, b)
            for b, c, d, f in zip(
                self.bases, self.candidates, self.distances, self.freqs, strict=True
            )
        )
        return MutationChoice(
            base=base,
            candidate=candidate,
            distance=distance,
            cost=cost,
            novel=candidate not in table,
        )


def choose_mutated_name(table: NameTable, mu: float, config: MutationConfig) -> MutationChoice:
    """Minimize the mutation cost over every base name and its candidates."""
    if not 0.0 <= mu <= 1.0:
        raise InvalidDomainError("Desired popularity must lie in [0, 1]", {"mu": mu})
    return CandidatePool.build(table, config).best(table, mu, config.lambda_)


def sweep_lambda(
    table: NameTable,
    mu: float,
    config: MutationConfig,
    lambdas: Iterable[float],
) -> pd.DataFrame:
    """Chosen candidate for each penalty weight, candidates enumerated once."""
    pool = CandidatePool.build(table, config)
    rows = []
    for lambda_ in lambdas:
        choice = pool.best(table, mu, lambda_)
        rows.append({"lambda": lambda_, **choice.model_dump()})
    return pd.DataFrame(
        rows, columns=["lambda", "base", "candidate", "distance", "cost", "novel"]
    )


def lambda_grid(low: float, high: float, count: int) -> Sequence[float]:
    """``count`` log-spaced penalty weights from ``low`` to ``high``."""
    if count < 1 or not 0.0 < low <= high:
        raise InvalidDomainError(
            "Penalty grid needs count >= 1 and 0 < low <= high",
            {"low": low, "high": high, "count": count},
        )
    return np.geomspace(low, high, count).tolist()
