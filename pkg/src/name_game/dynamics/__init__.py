"""The naming-game step map, its closed form and its diagnostics."""

from name_game.dynamics.assignment import NameAssigner, assign_name
from name_game.dynamics.closed_form import (
    closed_form_iterate,
    closed_form_step,
    closed_form_table,
    closed_form_tables,
)
from name_game.dynamics.diagnostics import dweezil_preferences, is_stable, satisfiability_report
from name_game.dynamics.preferences import (
    DweezilPreferences,
    ExplicitPreferences,
    LogNormalPreferences,
    PowerLawPreferences,
    PreferenceModel,
)
from name_game.dynamics.steppers import (
    DeterministicStepper,
    MonteCarloStepper,
    derive_seed,
    make_stepper,
    step_deterministic,
    step_montecarlo,
)
from name_game.dynamics.trajectory import (
    Trajectory,
    closed_form_trajectory,
    diagnostics_frame,
    iterate,
    step_diagnostics,
    write_trajectory,
)

__all__ = [
    "DeterministicStepper",
    "DweezilPreferences",
    "ExplicitPreferences",
    "LogNormalPreferences",
    "MonteCarloStepper",
    "NameAssigner",
    "PowerLawPreferences",
    "PreferenceModel",
    "Trajectory",
    "assign_name",
    "closed_form_iterate",
    "closed_form_step",
    "closed_form_table",
    "closed_form_tables",
    "closed_form_trajectory",
    "derive_seed",
    "diagnostics_frame",
    "dweezil_preferences",
    "is_stable",
    "iterate",
    "make_stepper",
    "satisfiability_report",
    "step_deterministic",
    "step_diagnostics",
    "step_montecarlo",
    "write_trajectory",
]
