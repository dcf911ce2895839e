"""Rank power laws, log-normal preferences, discretization and fitting."""

from name_game.distributions.discrete import (
    pref_mass_from_pairs,
    pref_mass_to_frame,
    read_pref_mass,
    write_pref_mass,
)
from name_game.distributions.fitting import fit_powerlaw, rank_frequency
from name_game.distributions.lognormal import (
    default_floor,
    lognormal_pref_mass,
    sample_pref_mass,
    sample_preferences,
)
from name_game.distributions.powerlaw import (
    default_labels,
    mass_from_arrays,
    powerlaw_normalize,
    powerlaw_pmf,
    powerlaw_pmf_array,
    powerlaw_pref_mass,
    powerlaw_table,
)

__all__ = [
    "default_floor",
    "default_labels",
    "fit_powerlaw",
    "lognormal_pref_mass",
    "mass_from_arrays",
    "powerlaw_normalize",
    "powerlaw_pmf",
    "powerlaw_pmf_array",
    "powerlaw_pref_mass",
    "powerlaw_table",
    "pref_mass_from_pairs",
    "pref_mass_to_frame",
    "rank_frequency",
    "read_pref_mass",
    "sample_pref_mass",
    "sample_preferences",
    "write_pref_mass",
]
