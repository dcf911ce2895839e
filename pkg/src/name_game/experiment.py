"""Run configuration and the simulate pipeline.

A run reads or builds an initial table, iterates it under one preference model and
writes per-step tables, diagnostics, error histograms and a manifest from which the
same run can be reproduced.
"""

import json
from pathlib import Path
from typing import Annotated, Any, Literal

import structlog
from pydantic import BaseModel, ConfigDict, Field

from name_game.core.config import SimulationSettings, load_mapping
from name_game.core.exceptions import ConfigurationError
from name_game.core.models import HistogramScale, SexFilter, StepMode, StepModeKind
from name_game.distributions.powerlaw import powerlaw_normalize, powerlaw_table
from name_game.dynamics.preferences import PreferenceModel
from name_game.dynamics.trajectory import Trajectory, iterate, write_trajectory
from name_game.ingestion.ssa import read_ssa_table
from name_game.metrics.errors import MEASURES, auto_edges, error_arrays, histogram, write_histogram
from name_game.population.serialization import read_table
from name_game.population.table import NameTable

logger = structlog.get_logger(__name__)

MANIFEST_NAME = "manifest.json"
SSA_SUFFIXES = {".txt"}


def load_table_source(
    path: Path | str,
    sex_filter: SexFilter | str = SexFilter.ALL,
    *,
    strict: bool = True,
) -> NameTable:
    """Read a name table from CSV/JSON, or build one from an SSA ``.txt`` file."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Input file not found: {path}")
    if path.suffix.lower() in SSA_SUFFIXES:
        return read_ssa_table(path, sex_filter, strict=strict)
    return read_table(path)


class PowerLawInitial(BaseModel):
    """Initial table ``k * rank**-t`` over synthetic names."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["powerlaw"] = "powerlaw"
    t: float = 1.0
    n_ranks: int = Field(default=1000, ge=1)

    def build(self) -> NameTable:
        return powerlaw_table(powerlaw_normalize(self.t, self.n_ranks))


class FileInitial(BaseModel):
    """Initial table read from a table file or an SSA file."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["file"] = "file"
    path: Path
    sex_filter: SexFilter = SexFilter.ALL
    strict: bool = True

    def build(self) -> NameTable:
        return load_table_source(self.path, self.sex_filter, strict=self.strict)


InitialSpec = Annotated[PowerLawInitial | FileInitial, Field(discriminator="kind")]


class RunConfig(BaseModel):
    """Everything needed to reproduce one simulation run."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    initial: InitialSpec = Field(default_factory=PowerLawInitial)
    preferences: PreferenceModel
    steps: int = Field(default=1, ge=0)
    mode: StepMode = Field(default_factory=StepMode.deterministic)
    output_dir: Path = Path("./runs")
    seed: int = Field(default=0, ge=0)
    chunk_size: int | None = Field(default=None, ge=1)
    histogram_bins: int | None = Field(default=None, ge=1)

    @property
    def effective_mode(self) -> StepMode:
        """Step mode carrying the run's root seed."""
        return self.mode.model_copy(update={"seed": self.seed})

    def resolved(self, settings: SimulationSettings) -> "RunConfig":
        """Copy with every result-affecting default taken from ``settings``.

        A manifest written from the resolved config replays the same run under any
        ambient settings.
        """
        return self.model_copy(
            update={
                "preferences": self.preferences.resolved(settings, self.mode.population_size),
                "chunk_size": self.chunk_size or settings.chunk_size,
                "histogram_bins": self.histogram_bins or settings.histogram_bins,
            }
        )

    def apply(self, settings: SimulationSettings) -> SimulationSettings:
        """``settings`` with this config's execution values laid over them."""
        update: dict[str, Any] = {}
        if self.chunk_size is not None:
            update["chunk_size"] = self.chunk_size
        if self.histogram_bins is not None:
            update["histogram_bins"] = self.histogram_bins
        return settings.model_copy(update=update)

    @classmethod
    def from_mapping(cls, data: dict[str, Any]) -> "RunConfig":
        """Accept a bare config or a run manifest holding one under ``config``."""
        if "config" in data and isinstance(data["config"], dict):
            data = data["config"]
        return cls.model_validate(data)

    @classmethod
    def from_file(cls, file_path: Path | str) -> "RunConfig":
        return cls.from_mapping(load_mapping(file_path))


_ALIASES = {
    "n": "n_ranks",
    "sex": "sex_filter",
    "tprime": "t_prime",
    "t'": "t_prime",
    "population": "population_size",
}


def parse_option(text: str, positional: str = "path") -> dict[str, Any]:
    """Parse ``kind:key=value,...``; a leading bare segment becomes ``positional``.

    ``"lognormal:mode=0.1%,sigma=1"`` gives
    ``{"kind": "lognormal", "mode": "0.1%", "sigma": "1"}``.
    """
    kind, _, rest = text.partition(":")
    kind = kind.strip()
    if not kind:
        raise ConfigurationError(f"Missing kind in {text!r}")
    options: dict[str, Any] = {"kind": kind}
    for index, segment in enumerate(s for s in rest.split(",") if s.strip()):
        key, sep, value = segment.partition("=")
        if not sep:
            if index != 0:
                raise ConfigurationError(f"Expected key=value, got {segment!r} in {text!r}")
            options[positional] = segment.strip()
            continue
        key = key.strip()
        options[_ALIASES.get(key, key)] = value.strip()
    return options


def initial_from_option(text: str) -> dict[str, Any]:
    """``powerlaw:t=1,n=1000`` or ``file:PATH[,sex=F][,strict=false]``."""
    return parse_option(text)


def preferences_from_option(text: str) -> dict[str, Any]:
    """``lognormal:mode=0.1%``, ``powerlaw:t_prime=0.5,floor=1e-4``, ``dweezil``, ``explicit:PATH``."""
    return parse_option(text)


class SimulationRun(BaseModel):
    """Where a run wrote its outputs and what it computed."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    output_dir: Path
    manifest_path: Path
    files: list[Path]
    trajectory: Trajectory


def build_manifest(config: RunConfig, files: list[Path], output_dir: Path) -> dict[str, Any]:
    """Config echo, seed and version. The output directory is left out so reruns compare."""
    from name_game import __version__

    return {
        "name": "name-game",
        "version": __version__,
        "seed": config.seed,
        "config": config.model_dump(mode="json", exclude={"output_dir"}),
        "outputs": sorted(path.relative_to(output_dir).as_posix() for path in files),
    }


def write_error_histograms(
    trajectory: Trajectory, output_dir: Path, settings: SimulationSettings
) -> list[Path]:
    """``outcomes_hist_{measure}.csv`` over every sampled parent of the run."""
    outcomes = trajectory.sampled_outcomes()
    if not len(outcomes):
        return []
    arrays = error_arrays(outcomes)
    written = []
    for measure in MEASURES:
        values = arrays[measure]
        edges = auto_edges(values, settings.histogram_bins, HistogramScale.LOG)
        hist = histogram(values, edges, HistogramScale.LOG)
        written.append(write_histogram(hist, output_dir / f"outcomes_hist_{measure}.csv"))
    return written


def run_simulation(
    config: RunConfig,
    settings: SimulationSettings | None = None,
    output_dir: Path | str | None = None,
) -> SimulationRun:
    """Iterate the configured table and write every output of the run."""
    settings = settings or SimulationSettings()
    config = config.resolved(settings)
    settings = config.apply(settings)
    out = Path(output_dir) if output_dir is not None else config.output_dir
    mode = config.effective_mode
    logger.info(
        "Starting simulation",
        initial=config.initial.kind,
        preferences=config.preferences.kind,
        steps=config.steps,
        mode=mode.kind.value,
        seed=config.seed,
    )

    table = config.initial.build()
    trajectory = iterate(table, config.preferences, config.steps, mode, settings)

    out.mkdir(parents=True, exist_ok=True)
    files = write_trajectory(trajectory, out)
    if mode.kind is StepModeKind.MONTE_CARLO:
        files.extend(write_error_histograms(trajectory, out, settings))

    manifest_path = out / MANIFEST_NAME
    manifest = build_manifest(config, files, out)
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")

    logger.info("Simulation written", output_dir=str(out), files=len(files) + 1)
    return SimulationRun(
        output_dir=out,
        manifest_path=manifest_path,
        files=[*files, manifest_path],
        trajectory=trajectory,
    )
