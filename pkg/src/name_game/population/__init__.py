"""Name universe and per-step popularity tables."""

from name_game.population.outcomes import ParentOutcomes
from name_game.population.serialization import (
    read_table,
    table_from_frame,
    table_to_csv,
    table_to_frame,
    table_to_json,
    write_table,
)
from name_game.population.table import (
    NameTable,
    freq_of,
    new_table,
    rank_of,
    table_from_arrays,
)

__all__ = [
    "NameTable",
    "ParentOutcomes",
    "freq_of",
    "new_table",
    "rank_of",
    "read_table",
    "table_from_arrays",
    "table_from_frame",
    "table_to_csv",
    "table_to_frame",
    "table_to_json",
    "write_table",
]
