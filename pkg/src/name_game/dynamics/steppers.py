"""Deterministic mass flow and Monte Carlo naming steps."""

from concurrent.futures import ThreadPoolExecutor
from functools import partial

import numpy as np

from name_game.core.base_stepper import BaseStepper, PreferenceSource, StepOutput
from name_game.core.config import SimulationSettings
from name_game.core.exceptions import InvalidDomainError, InvalidInputError
from name_game.core.models import DiscretePrefMass, StepMode, StepModeKind
from name_game.dynamics.assignment import NameAssigner
from name_game.population.outcomes import ParentOutcomes
from name_game.population.table import NameTable, table_from_arrays

# Parents per tie-break stream. Fixes stream offsets, independent of the worker count.
DEFAULT_CHUNK_SIZE = 1 << 16

# Sub-stream keys below a step seed.
PREFERENCE_STREAM = 0
TIE_BREAK_STREAM = 1


def derive_seed(root_seed: int, *key: int) -> int:
    """64-bit seed for the sub-stream ``key`` of ``root_seed``."""
    if root_seed < 0 or any(k < 0 for k in key):
        raise InvalidDomainError("Seeds must be non-negative", {"seed": root_seed, "key": key})
    sequence = np.random.SeedSequence(root_seed, spawn_key=key)
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def step_deterministic(table: NameTable, g: DiscretePrefMass) -> NameTable:
    """Every preference level sends its mass to its closest names, split equally on ties."""
    inflow = NameAssigner(table).flow(g.mus, g.masses)
    return table_from_arrays(table.names, inflow, step_index=table.step_index + 1)


def _tie_uniforms(seed: int, chunk: int, size: int) -> np.ndarray:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(chunk,))).random(size)


def _assign_chunk(
    assigner: NameAssigner,
    prefs: np.ndarray,
    seed: int,
    chunk_size: int,
    chunk: int,
) -> tuple[np.ndarray, int]:
    mus = prefs[chunk * chunk_size : (chunk + 1) * chunk_size]
    begin, end = assigner.spans(mus)
    tied = int(np.count_nonzero(end - begin > 1))
    uniforms = _tie_uniforms(seed, chunk, len(mus)) if tied else None
    return assigner.pick(begin, end, uniforms), tied


def step_montecarlo(
    table: NameTable,
    prefs: np.ndarray | list[float],
    seed: int = 0,
    *,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    max_workers: int = 1,
) -> tuple[NameTable, ParentOutcomes]:
    """Sample one step: every parent picks against the current table simultaneously.

    Ties are broken uniformly at random. Parent ``j`` reads its tie-break uniform from
    position ``j % chunk_size`` of the stream ``(seed, j // chunk_size)``, so results do
    not depend on ``max_workers``.
    """
    table_out, outcomes, _ = _step_montecarlo(
        table, prefs, seed, chunk_size=chunk_size, max_workers=max_workers
    )
    return table_out, outcomes


def _step_montecarlo(
    table: NameTable,
    prefs: np.ndarray | list[float],
    seed: int,
    *,
    chunk_size: int,
    max_workers: int,
) -> tuple[NameTable, ParentOutcomes, int]:
    prefs = np.asarray(prefs, dtype=np.float64)
    if prefs.size == 0:
        raise InvalidInputError("A Monte Carlo step needs at least one parent")
    if seed < 0:
        raise InvalidDomainError("Seeds must be non-negative", {"seed": seed})
    if chunk_size < 1:
        raise InvalidDomainError("Chunk size must be at least 1", {"chunk_size": chunk_size})

    assigner = NameAssigner(table)
    n_chunks = -(-len(prefs) // chunk_size)
    work = partial(_assign_chunk, assigner, prefs, seed, chunk_size)
    if max_workers > 1 and n_chunks > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            parts = list(pool.map(work, range(n_chunks)))
    else:
        parts = [work(chunk) for chunk in range(n_chunks)]

    chosen = np.concatenate([part for part, _ in parts])
    tied = sum(count for _, count in parts)
    counts = np.bincount(chosen, minlength=len(table))
    table_out = table_from_arrays(
        table.names, counts / len(prefs), step_index=table.step_index + 1
    )

    achieved_by_position = np.array(
        [table_out.freq_of(name) for name in table.names], dtype=np.float64
    )
    outcomes = ParentOutcomes(table.names, prefs, chosen, achieved_by_position[chosen])
    return table_out, outcomes, tied


class DeterministicStepper(BaseStepper):
    """Mass-flow steps against a discretized preference distribution."""

    @property
    def mode(self) -> StepMode:
        return StepMode.deterministic()

    def _step(self, table: NameTable, prefs: PreferenceSource, step_index: int) -> StepOutput:
        g = prefs.mass(table, self.settings)
        result = step_deterministic(table, g)
        return StepOutput(table=result.with_step(step_index))


class MonteCarloStepper(BaseStepper):
    """Sampled steps with a fixed population and a root seed."""

    def __init__(
        self,
        population_size: int,
        seed: int = 0,
        settings: SimulationSettings | None = None,
    ) -> None:
        super().__init__(settings)
        if population_size < 1:
            raise InvalidDomainError(
                "Population size must be at least 1", {"population_size": population_size}
            )
        self.population_size = population_size
        self.seed = seed

    @property
    def mode(self) -> StepMode:
        return StepMode.monte_carlo(self.population_size, self.seed)

    def _step(self, table: NameTable, prefs: PreferenceSource, step_index: int) -> StepOutput:
        step_seed = derive_seed(self.seed, step_index)
        desired = prefs.sample(
            table,
            self.population_size,
            derive_seed(step_seed, PREFERENCE_STREAM),
            self.settings,
        )
        result, outcomes, tied = _step_montecarlo(
            table,
            desired,
            derive_seed(step_seed, TIE_BREAK_STREAM),
            chunk_size=self.settings.chunk_size,
            max_workers=self.settings.max_workers,
        )
        if tied:
            self.logger.debug("Broke assignment ties at random", step=step_index, tied=tied)
        return StepOutput(
            table=result.with_step(step_index), outcomes=outcomes, tied_assignments=tied
        )


def make_stepper(mode: StepMode, settings: SimulationSettings | None = None) -> BaseStepper:
    """Stepper evaluating ``mode``."""
    if mode.kind is StepModeKind.MONTE_CARLO and mode.population_size is not None:
        return MonteCarloStepper(mode.population_size, mode.seed, settings)
    return DeterministicStepper(settings)
