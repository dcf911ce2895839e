"""Configuration management for naming-game simulations."""

import json
from pathlib import Path
from typing import Any

import yaml
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class SimulationSettings(BaseSettings):
    """Ambient settings shared by every command and stepper."""

    model_config = SettingsConfigDict(
        env_prefix="NAME_GAME_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # General settings
    name: str = "name-game"
    debug: bool = False
    log_level: str = "INFO"
    output_dir: Path = Path("./runs")

    # Monte Carlo execution
    max_workers: int = Field(default=4, ge=1)
    chunk_size: int = Field(default=1 << 16, ge=1)

    # Preference model defaults
    default_sigma: float = Field(default=1.0, gt=0.0)
    preference_bins: int = Field(default=200, ge=1)

    # Diagnostics
    histogram_bins: int = Field(default=50, ge=1)
    stability_tolerance: float = Field(default=1e-12, ge=0.0)
    satisfiability_tolerance: float = Field(default=1e-9, ge=0.0)

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Invalid log level. Must be one of {valid_levels}")
        return v.upper()

    def to_dict(self) -> dict[str, Any]:
        """Convert configuration to dictionary."""
        return self.model_dump()

    @classmethod
    def from_file(cls, file_path: Path | str) -> "SimulationSettings":
        """Load settings from a YAML or JSON file."""
        return cls(**load_mapping(file_path))


def load_mapping(file_path: Path | str) -> dict[str, Any]:
    """Read a YAML or JSON mapping from disk."""
    file_path = Path(file_path)
    if not file_path.exists():
        raise FileNotFoundError(f"Configuration file not found: {file_path}")

    content = file_path.read_text()

    if file_path.suffix in [".yaml", ".yml"]:
        data = yaml.safe_load(content)
    elif file_path.suffix == ".json":
        data = json.loads(content)
    else:
        raise ValueError(f"Unsupported configuration file format: {file_path.suffix}")

    if not isinstance(data, dict):
        raise ValueError(f"Configuration file must contain a mapping: {file_path}")
    return data
