"""Pydantic models for data validation and serialization."""

import math
import string
from enum import Enum
from typing import Annotated, Any

import numpy as np
from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    field_validator,
    model_validator,
)

# Tolerance on the total mass of a preference distribution.
MASS_TOLERANCE = 1e-12


def parse_proportion(value: Any) -> Any:
    """Accept ``0.001``, ``"0.001"`` or ``"0.1%"`` and return a float proportion.

    Values that are not strings are passed through so pydantic can report the type error.
    """
    if isinstance(value, str):
        text = value.strip()
        if text.endswith("%"):
            return float(text[:-1]) / 100.0
        return float(text)
    return value


Proportion = Annotated[float, BeforeValidator(parse_proportion), Field(ge=0.0, le=1.0)]


class StepModeKind(str, Enum):
    """How a single naming step is evaluated."""

    DETERMINISTIC = "deterministic"
    MONTE_CARLO = "monte-carlo"


class SexFilter(str, Enum):
    """Which records are kept when building a table from SSA data."""

    F = "F"
    M = "M"
    ALL = "all"


class Sex(str, Enum):
    """Sex column of an SSA record."""

    F = "F"
    M = "M"


class Verdict(str, Enum):
    """Satisfiability verdict for one desired popularity level."""

    SATISFIED = "satisfied"
    OVERSHOOT = "overshoot"
    UNDERSHOOT = "undershoot"


class HistogramScale(str, Enum):
    """Spacing of histogram bin edges."""

    LINEAR = "linear"
    LOG = "log"


class Orientation(str, Enum):
    """Direction of a rank power law."""

    DECREASING = "decreasing"
    INCREASING = "increasing"
    FLAT = "flat"

    @classmethod
    def of_exponent(cls, t: float) -> "Orientation":
        """Orientation of ``K * rank**-t``."""
        if t > 0:
            return cls.DECREASING
        if t < 0:
            return cls.INCREASING
        return cls.FLAT


class PowerLawParams(BaseModel):
    """Normalized discrete power law ``k * rank**-t`` over ranks ``1..n_ranks``."""

    model_config = ConfigDict(frozen=True)

    t: float
    n_ranks: int = Field(ge=1)
    k: float = Field(ge=0.0)
    log_k: float | None = None

    @model_validator(mode="after")
    def fill_log_k(self) -> "PowerLawParams":
        if self.log_k is None:
            if self.k <= 0.0:
                raise ValueError("k must be positive when log_k is not given")
            object.__setattr__(self, "log_k", math.log(self.k))
        return self

    @property
    def orientation(self) -> Orientation:
        return Orientation.of_exponent(self.t)


class LogNormalParams(BaseModel):
    """Log-normal preference law, parameterized by its mode."""

    model_config = ConfigDict(frozen=True)

    mode: Proportion
    sigma: float = Field(default=1.0, gt=0.0)
    floor: Proportion = 1e-7

    @model_validator(mode="after")
    def validate_ordering(self) -> "LogNormalParams":
        if not 0.0 < self.floor <= self.mode <= 1.0:
            raise ValueError("Log-normal parameters need 0 < floor <= mode <= 1")
        return self

    @property
    def log_mean(self) -> float:
        """Mean of the underlying normal, chosen so the density peaks at ``mode``."""
        return math.log(self.mode) + self.sigma**2

    @property
    def median(self) -> float:
        return self.mode * math.exp(self.sigma**2)


class DiscretePrefMass(BaseModel):
    """Discrete preference distribution g: pairs of (desired popularity, parent share)."""

    model_config = ConfigDict(frozen=True)

    pairs: tuple[tuple[float, float], ...]

    @field_validator("pairs")
    @classmethod
    def validate_pairs(cls, v: tuple[tuple[float, float], ...]) -> tuple[tuple[float, float], ...]:
        if not v:
            raise ValueError("Preference mass needs at least one pair")
        mus = [mu for mu, _ in v]
        masses = [p for _, p in v]
        if any(not 0.0 <= mu <= 1.0 for mu in mus):
            raise ValueError("Desired popularities must lie in [0, 1]")
        if any(p < 0.0 for p in masses):
            raise ValueError("Parent shares must be non-negative")
        if any(b <= a for a, b in zip(mus, mus[1:], strict=False)):
            raise ValueError("Desired popularities must be strictly increasing")
        total = math.fsum(masses)
        if abs(total - 1.0) > MASS_TOLERANCE:
            raise ValueError(f"Parent shares must sum to 1 (got {total!r})")
        return v

    @property
    def mus(self) -> np.ndarray:
        return np.array([mu for mu, _ in self.pairs], dtype=np.float64)

    @property
    def masses(self) -> np.ndarray:
        return np.array([p for _, p in self.pairs], dtype=np.float64)

    def demand(self, mu: float) -> float:
        """g(mu): share of parents wanting popularity ``mu`` (0 when absent)."""
        for value, p in self.pairs:
            if value == mu:
                return p
        return 0.0


class ParentOutcome(BaseModel):
    """One parent's desired popularity, chosen name and achieved popularity."""

    model_config = ConfigDict(frozen=True)

    desired: Proportion
    chosen: str
    achieved: Proportion


class ErrorTriple(BaseModel):
    """Parent error measures: ratio, absolute difference and relative error."""

    model_config = ConfigDict(frozen=True)

    ratio: float = Field(ge=0.0)
    absdiff: float = Field(ge=0.0)
    relerror: float = Field(ge=0.0)


class Histogram(BaseModel):
    """Binned counts with ascending edges."""

    model_config = ConfigDict(frozen=True)

    edges: tuple[float, ...]
    counts: tuple[int, ...]
    scale: HistogramScale = HistogramScale.LINEAR

    @model_validator(mode="after")
    def validate_shape(self) -> "Histogram":
        if len(self.counts) != len(self.edges) - 1:
            raise ValueError("Histogram needs exactly one count per bin")
        if any(c < 0 for c in self.counts):
            raise ValueError("Histogram counts must be non-negative")
        return self

    @property
    def total(self) -> int:
        return sum(self.counts)


class PowerLawFit(BaseModel):
    """Least-squares power-law fit on log-log rank/frequency data."""

    model_config = ConfigDict(frozen=True)

    t_hat: float
    k_hat: float
    r2: float
    n_points: int


class StepDiagnostics(BaseModel):
    """Per-step diagnostics of a trajectory, comparing step ``step`` with ``step - 1``."""

    step: int
    spearman: float
    top1_share: float
    fitted_t: float
    r2: float


class StepMode(BaseModel):
    """Deterministic mass flow or Monte Carlo sampling with a seeded population."""

    model_config = ConfigDict(frozen=True)

    kind: StepModeKind = StepModeKind.DETERMINISTIC
    population_size: int | None = None
    seed: int = 0

    @model_validator(mode="after")
    def validate_population(self) -> "StepMode":
        if self.kind is StepModeKind.MONTE_CARLO and (
            self.population_size is None or self.population_size < 1
        ):
            raise ValueError("Monte Carlo mode needs population_size >= 1")
        return self

    @classmethod
    def deterministic(cls) -> "StepMode":
        return cls(kind=StepModeKind.DETERMINISTIC)

    @classmethod
    def monte_carlo(cls, population_size: int, seed: int = 0) -> "StepMode":
        return cls(kind=StepModeKind.MONTE_CARLO, population_size=population_size, seed=seed)


class SatisfiabilityRow(BaseModel):
    """Demand vs supply at one desired popularity level."""

    mu: float
    demand: float
    resulting: float
    verdict: Verdict | None = None


class SatisfiabilityReport(BaseModel):
    """Verdicts for every desired popularity of a preference distribution."""

    rows: list[SatisfiabilityRow]
    tolerance: float

    @property
    def satisfied(self) -> bool:
        """True iff every row that carries a verdict is satisfied."""
        return all(
            row.verdict is Verdict.SATISFIED for row in self.rows if row.verdict is not None
        )

    def row_for(self, mu: float) -> SatisfiabilityRow:
        for row in self.rows:
            if row.mu == mu:
                return row
        raise KeyError(mu)


class SsaRecord(BaseModel):
    """One line of an SSA yearly name file."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(min_length=1)
    sex: Sex
    count: int = Field(ge=0)


class ListStats(BaseModel):
    """Popularity statistics of a list of names within a table."""

    model_config = ConfigDict(frozen=True)

    mean: float
    std: float = Field(ge=0.0)
    n: int = Field(ge=1)
    missing: int = 0

    @property
    def mean_percent(self) -> float:
        return self.mean * 100.0

    @property
    def std_percent(self) -> float:
        return self.std * 100.0

    @property
    def single(self) -> bool:
        """Sample std is undefined for one name and is reported as 0."""
        return self.n == 1


class WelchResult(BaseModel):
    """Welch's unequal-variance t-test."""

    model_config = ConfigDict(frozen=True)

    t: float
    df: float
    p: float


class MutationConfig(BaseModel):
    """Penalty weight, alphabet and edit budget of the name-mutation objective."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lambda_: float = Field(default=0.01, ge=0.0, alias="lambda")
    alphabet: str = string.ascii_lowercase
    max_edits: int = Field(default=1, ge=0, le=2)
    capitalize_initial: bool = True

    @field_validator("alphabet")
    @classmethod
    def validate_alphabet(cls, v: str) -> str:
        if not v:
            raise ValueError("Alphabet must not be empty")
        return "".join(dict.fromkeys(v))


class MutationChoice(BaseModel):
    """Minimizer of the mutation objective."""

    model_config = ConfigDict(frozen=True)

    base: str
    candidate: str
    distance: int
    cost: float
    novel: bool = False


class SimulationStats(BaseModel):
    """Statistics for stepping operations."""

    steps_completed: int = 0
    parents_assigned: int = 0
    tied_assignments: int = 0
    total_duration: float = 0.0
    average_step_time: float = 0.0
