"""Shared fixtures and utilities for CLI tests."""

from pathlib import Path

import pandas as pd
from click.testing import CliRunner, Result

from name_game.cli import cli
from name_game.distributions.powerlaw import powerlaw_normalize, powerlaw_table
from name_game.population.serialization import write_table
from tests.fixtures import FIFTY_NAMES

# Wide, colourless output keeps rich tables on one line per row.
CLI_ENV = {"NO_COLOR": "1", "COLUMNS": "200"}


def invoke(*args: str) -> Result:
    """Run the CLI with ``args`` and return the click result."""
    return CliRunner().invoke(cli, list(args), env=CLI_ENV)


def write_fifty_names(path: Path) -> Path:
    """Power law t=1 over fifty short capitalized names, written as CSV."""
    return write_table(powerlaw_table(powerlaw_normalize(1.0, 50), FIFTY_NAMES), path)


def read_csv(path: Path) -> pd.DataFrame:
    return pd.read_csv(path)
