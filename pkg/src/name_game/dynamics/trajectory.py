"""Repeated naming steps and their per-step diagnostics."""

import math
from collections.abc import Sequence
from pathlib import Path

import pandas as pd
import structlog
from pydantic import BaseModel, ConfigDict, model_validator

from name_game.core.base_stepper import PreferenceSource
from name_game.core.config import SimulationSettings
from name_game.core.exceptions import InsufficientDataError, InvalidDomainError
from name_game.core.models import PowerLawParams, StepDiagnostics, StepMode
from name_game.distributions.fitting import fit_powerlaw
from name_game.dynamics.closed_form import closed_form_tables
from name_game.dynamics.steppers import make_stepper
from name_game.metrics.ranking import spearman, top_k_share
from name_game.population.outcomes import ParentOutcomes
from name_game.population.serialization import FLOAT_FORMAT, write_table
from name_game.population.table import NameTable

logger = structlog.get_logger(__name__)

DIAGNOSTIC_COLUMNS = ["step", "spearman", "top1_share", "fitted_t", "r2"]


class Trajectory(BaseModel):
    """Tables indexed by step, optional per-step outcomes and pairwise diagnostics."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    tables: list[NameTable]
    outcomes: list[ParentOutcomes | None] = []
    diagnostics: list[StepDiagnostics] = []

    @model_validator(mode="after")
    def validate_steps(self) -> "Trajectory":
        if not self.tables:
            raise ValueError("A trajectory holds at least its initial table")
        first = self.tables[0].step_index
        for offset, table in enumerate(self.tables):
            if table.step_index != first + offset:
                raise ValueError("Table step indices must be consecutive")
        if self.diagnostics and len(self.diagnostics) != len(self.tables) - 1:
            raise ValueError("Diagnostics need one row per consecutive table pair")
        return self

    @property
    def steps(self) -> int:
        return len(self.tables) - 1

    @property
    def final(self) -> NameTable:
        return self.tables[-1]

    def sampled_outcomes(self) -> ParentOutcomes:
        """All recorded outcomes across steps."""
        return ParentOutcomes.concat([o for o in self.outcomes if o is not None])


def step_diagnostics(
    previous: NameTable, current: NameTable, labels: Sequence[str] | None = None
) -> StepDiagnostics:
    """Spearman against the previous table, top-1 share and power-law fit of ``current``.

    Ranks for the fit follow ``labels`` (usually the initial table's order). Undefined
    measures are reported as ``nan``.
    """
    rho = spearman(previous, current) if len(current) >= 2 else math.nan
    try:
        fit = fit_powerlaw(current, labels=labels)
        fitted_t, r2 = fit.t_hat, fit.r2
    except InsufficientDataError:
        fitted_t, r2 = math.nan, math.nan
    return StepDiagnostics(
        step=current.step_index,
        spearman=rho,
        top1_share=top_k_share(current, 1),
        fitted_t=fitted_t,
        r2=r2,
    )


def diagnose(tables: Sequence[NameTable]) -> list[StepDiagnostics]:
    labels = tables[0].names
    return [step_diagnostics(a, b, labels) for a, b in zip(tables, tables[1:], strict=False)]


def iterate(
    table: NameTable,
    pref_model: PreferenceSource,
    n: int,
    mode: StepMode | None = None,
    settings: SimulationSettings | None = None,
) -> Trajectory:
    """Apply ``n`` steps with the same preferences and diagnose every consecutive pair."""
    if n < 0:
        raise InvalidDomainError("Step count must be non-negative", {"n": n})
    stepper = make_stepper(mode or StepMode.deterministic(), settings)

    tables = [table]
    outcomes: list[ParentOutcomes | None] = [None]
    for output in stepper.run(table, pref_model, n):
        tables.append(output.table)
        outcomes.append(output.outcomes)

    stats = stepper.get_stats()
    logger.info(
        "Trajectory completed",
        steps=stats.steps_completed,
        mode=stepper.mode.kind.value,
        average_step_time=stats.average_step_time,
        tied=stats.tied_assignments,
    )
    return Trajectory(tables=tables, outcomes=outcomes, diagnostics=diagnose(tables))


def closed_form_trajectory(
    params: PowerLawParams,
    t_prime: float,
    n: int,
    labels: Sequence[str] | None = None,
) -> Trajectory:
    """Closed-form iterates as a trajectory, diagnosed like a simulated one."""
    tables = closed_form_tables(params, t_prime, n, labels)
    return Trajectory(tables=tables, outcomes=[None] * len(tables), diagnostics=diagnose(tables))


def diagnostics_frame(trajectory: Trajectory) -> pd.DataFrame:
    return pd.DataFrame(
        [d.model_dump() for d in trajectory.diagnostics], columns=DIAGNOSTIC_COLUMNS
    )


def write_trajectory(trajectory: Trajectory, out_dir: Path | str) -> list[Path]:
    """Write ``tables/step_XXXX.csv`` per step and, once steps exist, ``diagnostics.csv``."""
    out_dir = Path(out_dir)
    written = [
        write_table(table, out_dir / "tables" / f"step_{table.step_index:04d}.csv")
        for table in trajectory.tables
    ]
    if trajectory.diagnostics:
        diagnostics_path = out_dir / "diagnostics.csv"
        diagnostics_path.write_text(
            diagnostics_frame(trajectory).to_csv(
                index=False, float_format=FLOAT_FORMAT, lineterminator="\n"
            )
        )
        written.append(diagnostics_path)
    return written
