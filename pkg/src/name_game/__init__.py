"""
name-game: simulations of myopic parents choosing baby names by popularity
Power laws, preference distributions, closed-form analysis and Monte Carlo runs
"""

from importlib.metadata import version

try:
    __version__ = version("name-game")
except Exception:
    __version__ = "0.1.0"

from name_game.core.config import SimulationSettings
from name_game.core.exceptions import NameGameError
from name_game.core.models import DiscretePrefMass, PowerLawParams, StepMode
from name_game.dynamics import iterate, step_deterministic, step_montecarlo
from name_game.experiment import RunConfig, run_simulation
from name_game.population import NameTable, new_table

__all__ = [
    "DiscretePrefMass",
    "NameGameError",
    "NameTable",
    "PowerLawParams",
    "RunConfig",
    "SimulationSettings",
    "StepMode",
    "__version__",
    "iterate",
    "new_table",
    "run_simulation",
    "step_deterministic",
    "step_montecarlo",
]
