"""Parsing SSA yearly name files (``yobYYYY.txt``) into records and name tables."""

import re
from collections.abc import Iterable, Sequence
from pathlib import Path

import pandas as pd
import structlog

from name_game.core.exceptions import InsufficientDataError, ParsingError
from name_game.core.models import Sex, SexFilter, SsaRecord
from name_game.population.table import NameTable, table_from_arrays

logger = structlog.get_logger(__name__)

_COUNT = re.compile(r"[0-9]+")
_SEXES = {sex.value: sex for sex in Sex}


def _parse_line(line: str, line_number: int) -> SsaRecord:
    fields = line.split(",")
    if len(fields) != 3:
        raise ParsingError(
            f"Expected 3 comma-separated fields, got {len(fields)}",
            line_number,
            {"line": line},
        )
    name, sex, count = fields
    if not name:
        raise ParsingError("Empty name", line_number, {"line": line})
    if sex not in _SEXES:
        raise ParsingError(f"Sex must be F or M, got {sex!r}", line_number, {"line": line})
    if not _COUNT.fullmatch(count):
        raise ParsingError(f"Count is not a non-negative integer: {count!r}", line_number)
    return SsaRecord(name=name, sex=_SEXES[sex], count=int(count))


def parse_ssa_lines(
    stream: str | Iterable[str], *, strict: bool = True
) -> tuple[list[SsaRecord], int]:
    """Parse records and count skipped malformed lines (always 0 in strict mode)."""
    lines = stream.splitlines() if isinstance(stream, str) else stream
    records: list[SsaRecord] = []
    skipped = 0
    for line_number, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        try:
            records.append(_parse_line(line, line_number))
        except ParsingError:
            if strict:
                raise
            skipped += 1
            logger.debug("Skipping malformed line", line_number=line_number)
    if skipped:
        logger.warning("Skipped malformed SSA lines", skipped=skipped, parsed=len(records))
    return records, skipped


def parse_ssa_year(stream: str | Iterable[str], *, strict: bool = True) -> list[SsaRecord]:
    """One record per ``name,sex,count`` line.

    Strict mode raises :class:`ParsingError` with the 1-based line number of the first
    malformed line; lenient mode skips such lines and logs how many were dropped.
    """
    records, _ = parse_ssa_lines(stream, strict=strict)
    return records


def read_ssa_file(path: Path | str, *, strict: bool = True) -> list[SsaRecord]:
    try:
        with Path(path).open(encoding="utf-8", newline="") as handle:
            return parse_ssa_year(handle, strict=strict)
    except UnicodeDecodeError as e:
        raise ParsingError(f"SSA file {path} is not valid UTF-8: {e!s}") from e


def serialize_ssa_records(records: Iterable[SsaRecord], newline: str = "\n") -> str:
    """Write records back in the ``name,sex,count`` layout."""
    return "".join(f"{r.name},{r.sex.value},{r.count}{newline}" for r in records)


def merge_records(*record_sets: Sequence[SsaRecord]) -> list[SsaRecord]:
    """Sum counts per (name, sex) across files.

    The result is sorted like SSA files (F before M, then descending count, then name),
    so it does not depend on the order of the inputs.
    """
    totals: dict[tuple[str, Sex], int] = {}
    for records in record_sets:
        for r in records:
            totals[(r.name, r.sex)] = totals.get((r.name, r.sex), 0) + r.count
    merged = [SsaRecord(name=name, sex=sex, count=count) for (name, sex), count in totals.items()]
    return sorted(merged, key=lambda r: (r.sex.value, -r.count, r.name))


def records_to_frame(records: Sequence[SsaRecord]) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "name": [r.name for r in records],
            "sex": [r.sex.value for r in records],
            "count": [r.count for r in records],
        },
        columns=["name", "sex", "count"],
    )


def build_table(
    records: Sequence[SsaRecord], sex_filter: SexFilter | str = SexFilter.ALL
) -> NameTable:
    """Frequencies within the filtered records; ``all`` merges a name across sexes."""
    sex_filter = SexFilter(sex_filter)
    frame = records_to_frame(records)
    if sex_filter is not SexFilter.ALL:
        frame = frame[frame["sex"] == sex_filter.value]

    totals = frame.groupby("name", sort=True)["count"].sum()
    grand_total = int(totals.sum())
    if totals.empty or grand_total == 0:
        raise InsufficientDataError(
            "No births left after filtering",
            {"sex_filter": sex_filter.value, "records": len(records)},
        )
    return table_from_arrays(
        totals.index.tolist(), (totals.to_numpy(dtype="int64") / grand_total).tolist()
    )


def read_ssa_table(
    path: Path | str,
    sex_filter: SexFilter | str = SexFilter.ALL,
    *,
    strict: bool = True,
) -> NameTable:
    """Parse an SSA file and build its name table."""
    return build_table(read_ssa_file(path, strict=strict), sex_filter)
