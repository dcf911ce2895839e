"""Core functionality: settings, errors and value models."""

from name_game.core.config import SimulationSettings, load_mapping
from name_game.core.exceptions import (
    ConfigurationError,
    DegenerateInputError,
    InsufficientDataError,
    InvalidDomainError,
    InvalidInputError,
    NameGameError,
    NormalizationError,
    NotFoundError,
    ParsingError,
    UndefinedRatioError,
)
from name_game.core.models import (
    DiscretePrefMass,
    ErrorTriple,
    Histogram,
    HistogramScale,
    ListStats,
    LogNormalParams,
    MutationChoice,
    MutationConfig,
    Orientation,
    ParentOutcome,
    PowerLawFit,
    PowerLawParams,
    SatisfiabilityReport,
    SatisfiabilityRow,
    Sex,
    SexFilter,
    SsaRecord,
    StepDiagnostics,
    StepMode,
    StepModeKind,
    Verdict,
    WelchResult,
)

__all__ = [
    # Exceptions
    "ConfigurationError",
    "DegenerateInputError",
    # Models
    "DiscretePrefMass",
    "ErrorTriple",
    "Histogram",
    "HistogramScale",
    "InsufficientDataError",
    "InvalidDomainError",
    "InvalidInputError",
    "ListStats",
    "LogNormalParams",
    "MutationChoice",
    "MutationConfig",
    "NameGameError",
    "NormalizationError",
    "NotFoundError",
    "Orientation",
    "ParentOutcome",
    "ParsingError",
    "PowerLawFit",
    "PowerLawParams",
    "SatisfiabilityReport",
    "SatisfiabilityRow",
    "Sex",
    "SexFilter",
    # Configuration
    "SimulationSettings",
    "SsaRecord",
    "StepDiagnostics",
    "StepMode",
    "StepModeKind",
    "UndefinedRatioError",
    "Verdict",
    "WelchResult",
    "load_mapping",
]
