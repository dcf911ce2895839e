"""CSV and JSON serialization of name tables."""

import json
from pathlib import Path

import pandas as pd

from name_game.core.exceptions import ParsingError
from name_game.population.table import NameTable, new_table

# 17 significant digits round-trip every float64 exactly.
FLOAT_FORMAT = "%.17g"
TABLE_COLUMNS = ["name", "frequency"]


def table_to_frame(table: NameTable) -> pd.DataFrame:
    """Table entries as a ``name, frequency`` frame in table order."""
    return pd.DataFrame({"name": list(table.names), "frequency": list(table.frequencies)})


def table_from_frame(frame: pd.DataFrame, step_index: int = 0) -> NameTable:
    """Build a table from a frame with ``name`` and ``frequency`` columns."""
    missing = [col for col in TABLE_COLUMNS if col not in frame.columns]
    if missing:
        raise ParsingError(f"Table is missing columns: {missing}", details={"missing": missing})
    try:
        frequencies = pd.to_numeric(frame["frequency"], errors="raise")
    except (TypeError, ValueError) as e:
        raise ParsingError(f"Non-numeric frequency column: {e!s}") from e
    return new_table(
        zip(frame["name"].astype(str), frequencies.astype(float), strict=True),
        step_index=step_index,
    )


def table_to_csv(table: NameTable) -> str:
    return table_to_frame(table).to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def table_to_json(table: NameTable) -> str:
    return json.dumps(dict(table.entries), indent=2)


def write_table(table: NameTable, path: Path | str) -> Path:
    """Write a table as CSV or JSON depending on the file suffix."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = table_to_json(table) if path.suffix == ".json" else table_to_csv(table)
    path.write_text(text)
    return path


def read_table_csv(path: Path | str, step_index: int = 0) -> NameTable:
    try:
        frame = pd.read_csv(
            path,
            dtype={"name": str},
            keep_default_na=False,
            float_precision="round_trip",
        )
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise ParsingError(f"Could not parse table CSV {path}: {e!s}") from e
    return table_from_frame(frame, step_index)


def read_table_json(path: Path | str, step_index: int = 0) -> NameTable:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ParsingError(f"Could not parse table JSON {path}: {e.msg}", e.lineno) from e
    except UnicodeDecodeError as e:
        raise ParsingError(f"Could not decode table JSON {path}: {e!s}") from e
    if not isinstance(data, dict):
        raise ParsingError("Table JSON must be an object mapping name to frequency")
    try:
        pairs = [(str(name), float(freq)) for name, freq in data.items()]
    except (TypeError, ValueError) as e:
        raise ParsingError(f"Non-numeric frequency in {path}: {e!s}") from e
    return new_table(pairs, step_index)


def read_table(path: Path | str, step_index: int = 0) -> NameTable:
    """Read a table from CSV or JSON depending on the file suffix."""
    path = Path(path)
    if path.suffix == ".json":
        return read_table_json(path, step_index)
    return read_table_csv(path, step_index)
