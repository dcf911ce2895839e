"""Real name data: SSA files, empirical tables and name-list statistics."""

from name_game.ingestion.list_stats import name_list_stats, welch_t_test
from name_game.ingestion.ssa import (
    build_table,
    merge_records,
    parse_ssa_lines,
    parse_ssa_year,
    read_ssa_file,
    read_ssa_table,
    records_to_frame,
    serialize_ssa_records,
)

__all__ = [
    "build_table",
    "merge_records",
    "name_list_stats",
    "parse_ssa_lines",
    "parse_ssa_year",
    "read_ssa_file",
    "read_ssa_table",
    "records_to_frame",
    "serialize_ssa_records",
    "welch_t_test",
]
