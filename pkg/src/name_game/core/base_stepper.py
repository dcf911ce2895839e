"""Base stepper class that the deterministic and Monte Carlo steppers inherit from."""

import time
from abc import ABC, abstractmethod
from collections.abc import Iterator
from typing import Protocol

import numpy as np
import structlog
from pydantic import BaseModel, ConfigDict

from name_game.core.config import SimulationSettings
from name_game.core.exceptions import NameGameError
from name_game.core.models import DiscretePrefMass, SimulationStats, StepMode
from name_game.population.outcomes import ParentOutcomes
from name_game.population.table import NameTable


class PreferenceSource(Protocol):
    """Anything that yields parental preferences for a given table."""

    def mass(self, table: NameTable, settings: SimulationSettings) -> DiscretePrefMass: ...

    def sample(
        self, table: NameTable, n: int, seed: int, settings: SimulationSettings
    ) -> np.ndarray: ...


class StepOutput(BaseModel):
    """The table after one step and, for sampled steps, every parent's outcome."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    table: NameTable
    outcomes: ParentOutcomes | None = None
    tied_assignments: int = 0


class BaseStepper(ABC):
    """Abstract base class for naming-step evaluators."""

    def __init__(self, settings: SimulationSettings | None = None) -> None:
        self.settings = settings or SimulationSettings()
        self.logger = structlog.get_logger(self.__class__.__name__)
        self.stats = SimulationStats()

    @property
    @abstractmethod
    def mode(self) -> StepMode:
        """Return the step mode this stepper evaluates."""
        ...

    @abstractmethod
    def _step(self, table: NameTable, prefs: PreferenceSource, step_index: int) -> StepOutput:
        """Produce the table for ``step_index`` from ``table``."""
        ...

    def step(self, table: NameTable, prefs: PreferenceSource) -> StepOutput:
        """
        Advance a table by one naming step.

        Args:
            table: Current table f_i
            prefs: Preferences applied at this step

        Returns:
            StepOutput holding f_{i+1} with ``step_index`` incremented
        """
        step_index = table.step_index + 1
        start = time.perf_counter()
        self.logger.debug("Starting step", step=step_index, mode=self.mode.kind.value)

        try:
            output = self._step(table, prefs, step_index)
        except NameGameError as e:
            self.logger.error(
                "Step failed with known error",
                step=step_index,
                error=str(e),
                details=e.details,
            )
            raise

        duration = time.perf_counter() - start
        self.stats.steps_completed += 1
        self.stats.total_duration += duration
        self.stats.tied_assignments += output.tied_assignments
        if output.outcomes is not None:
            self.stats.parents_assigned += len(output.outcomes)

        self.logger.info(
            "Step completed",
            step=step_index,
            duration=duration,
            names=len(output.table),
            tied=output.tied_assignments,
        )
        return output

    def run(self, table: NameTable, prefs: PreferenceSource, n: int) -> Iterator[StepOutput]:
        """Apply ``n`` steps with the same preferences, yielding each result."""
        current = table
        for _ in range(n):
            output = self.step(current, prefs)
            current = output.table
            yield output

    def get_stats(self) -> SimulationStats:
        """Get current stepping statistics."""
        if self.stats.steps_completed > 0:
            self.stats.average_step_time = self.stats.total_duration / self.stats.steps_completed
        return self.stats

    def reset_stats(self) -> None:
        """Reset stepping statistics."""
        self.stats = SimulationStats()


__all__ = ["BaseStepper", "PreferenceSource", "StepOutput"]
