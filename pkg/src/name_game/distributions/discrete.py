"""Reading and writing discrete preference masses as ``mu,p`` CSV."""

import math
from pathlib import Path

import pandas as pd

from name_game.core.exceptions import NormalizationError, ParsingError
from name_game.core.models import DiscretePrefMass, parse_proportion
from name_game.population.serialization import FLOAT_FORMAT

MASS_COLUMNS = ["mu", "p"]
# Mass files further than this from summing to one are rejected.
INPUT_MASS_TOLERANCE = 1e-3


def pref_mass_to_frame(mass: DiscretePrefMass) -> pd.DataFrame:
    return pd.DataFrame({"mu": mass.mus, "p": mass.masses})


def pref_mass_from_pairs(pairs: list[tuple[float, float]]) -> DiscretePrefMass:
    """Sort pairs by ``mu``, merge repeated levels and renormalize near-unit totals."""
    merged: dict[float, float] = {}
    for mu, p in pairs:
        merged[mu] = merged.get(mu, 0.0) + p
    total = math.fsum(merged.values())
    if abs(total - 1.0) > INPUT_MASS_TOLERANCE:
        raise NormalizationError(
            f"Preference shares sum to {total!r}, outside the accepted [0.999, 1.001]",
            {"sum": total},
        )
    return DiscretePrefMass(pairs=tuple((mu, merged[mu] / total) for mu in sorted(merged)))


def read_pref_mass(path: Path | str) -> DiscretePrefMass:
    """Read a ``mu,p`` CSV; either column may hold percent strings such as ``0.1%``."""
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise ParsingError(f"Could not parse preference CSV {path}: {e!s}") from e

    missing = [col for col in MASS_COLUMNS if col not in frame.columns]
    if missing:
        raise ParsingError(f"Preference CSV is missing columns: {missing}")

    pairs = []
    # Header is line 1.
    for line_number, (mu, p) in enumerate(zip(frame["mu"], frame["p"], strict=True), start=2):
        try:
            pairs.append((float(parse_proportion(mu)), float(parse_proportion(p))))
        except ValueError as e:
            raise ParsingError(f"Invalid preference row: {e!s}", line_number) from e
    if not pairs:
        raise ParsingError(f"Preference CSV {path} has no rows")
    return pref_mass_from_pairs(pairs)


def write_pref_mass(mass: DiscretePrefMass, path: Path | str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(
        pref_mass_to_frame(mass).to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    )
    return path
