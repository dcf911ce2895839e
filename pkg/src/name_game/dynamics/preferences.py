"""Preference models: the parental desired-popularity distribution g."""

from pathlib import Path
from typing import Annotated, Literal, Self, cast

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from name_game.core.config import SimulationSettings
from name_game.core.models import DiscretePrefMass, LogNormalParams, Proportion
from name_game.distributions.discrete import read_pref_mass
from name_game.distributions.lognormal import (
    default_floor,
    lognormal_pref_mass,
    sample_pref_mass,
    sample_preferences,
)
from name_game.distributions.powerlaw import powerlaw_pref_mass
from name_game.dynamics.diagnostics import dweezil_preferences
from name_game.population.table import NameTable

# Floor used when no population size is known (deterministic mass flow).
DETERMINISTIC_FLOOR = 1e-7


class LogNormalPreferences(BaseModel):
    """Log-normal preferences peaking at ``mode``."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["lognormal"] = "lognormal"
    mode: Proportion
    sigma: float | None = Field(default=None, gt=0.0)
    floor: Proportion | None = None
    bins: int | None = Field(default=None, ge=1)

    def params(
        self, settings: SimulationSettings, population_size: int | None = None
    ) -> LogNormalParams:
        """Concrete law; the floor defaults to a tenth of a person, capped at ``mode``."""
        if self.floor is not None:
            floor = self.floor
        elif population_size is not None:
            floor = default_floor(population_size)
        else:
            floor = DETERMINISTIC_FLOOR
        return LogNormalParams(
            mode=self.mode,
            sigma=self.sigma if self.sigma is not None else settings.default_sigma,
            floor=min(floor, self.mode),
        )

    def resolved(
        self, settings: SimulationSettings, population_size: int | None = None
    ) -> Self:
        """Copy with sigma, floor and bins filled in from ``settings`` where unset."""
        params = self.params(settings, population_size)
        return self.model_copy(
            update={
                "sigma": params.sigma,
                "floor": params.floor,
                "bins": self.bins or settings.preference_bins,
            }
        )

    def mass(self, table: NameTable, settings: SimulationSettings) -> DiscretePrefMass:  # noqa: ARG002
        return lognormal_pref_mass(self.params(settings), self.bins or settings.preference_bins)

    def sample(
        self, table: NameTable, n: int, seed: int, settings: SimulationSettings  # noqa: ARG002
    ) -> np.ndarray:
        return sample_preferences(self.params(settings, population_size=n), n, seed)


class PowerLawPreferences(BaseModel):
    """Power-law preferences ``g(mu) ~ mu**-t_prime`` on ``[floor, 1]``."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["powerlaw"] = "powerlaw"
    t_prime: float
    floor: float = Field(gt=0.0, lt=1.0)
    bins: int | None = Field(default=None, ge=1)

    def resolved(
        self, settings: SimulationSettings, population_size: int | None = None  # noqa: ARG002
    ) -> Self:
        return self.model_copy(update={"bins": self.bins or settings.preference_bins})

    def mass(self, table: NameTable, settings: SimulationSettings) -> DiscretePrefMass:  # noqa: ARG002
        return powerlaw_pref_mass(self.t_prime, self.floor, self.bins or settings.preference_bins)

    def sample(
        self, table: NameTable, n: int, seed: int, settings: SimulationSettings
    ) -> np.ndarray:
        return sample_pref_mass(self.mass(table, settings), n, seed)


class DweezilPreferences(BaseModel):
    """Every parent wants their own name's current popularity."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["dweezil"] = "dweezil"

    def resolved(
        self, settings: SimulationSettings, population_size: int | None = None  # noqa: ARG002
    ) -> Self:
        return self

    def mass(self, table: NameTable, settings: SimulationSettings) -> DiscretePrefMass:  # noqa: ARG002
        return dweezil_preferences(table)

    def sample(
        self, table: NameTable, n: int, seed: int, settings: SimulationSettings
    ) -> np.ndarray:
        return sample_pref_mass(self.mass(table, settings), n, seed)


class ExplicitPreferences(BaseModel):
    """A fixed discrete mass, given inline or as a ``mu,p`` CSV."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["explicit"] = "explicit"
    path: Path | None = None
    pref_mass: DiscretePrefMass | None = None

    _loaded: DiscretePrefMass | None = PrivateAttr(default=None)

    @model_validator(mode="after")
    def validate_source(self) -> "ExplicitPreferences":
        if (self.path is None) == (self.pref_mass is None):
            raise ValueError("Explicit preferences need exactly one of path or pref_mass")
        return self

    def resolved(
        self, settings: SimulationSettings, population_size: int | None = None  # noqa: ARG002
    ) -> Self:
        return self

    def mass(self, table: NameTable, settings: SimulationSettings) -> DiscretePrefMass:  # noqa: ARG002
        if self.pref_mass is not None:
            return self.pref_mass
        if self._loaded is None:
            self._loaded = read_pref_mass(cast(Path, self.path))
        return self._loaded

    def sample(
        self, table: NameTable, n: int, seed: int, settings: SimulationSettings
    ) -> np.ndarray:
        return sample_pref_mass(self.mass(table, settings), n, seed)


PreferenceModel = Annotated[
    LogNormalPreferences | PowerLawPreferences | DweezilPreferences | ExplicitPreferences,
    Field(discriminator="kind"),
]
