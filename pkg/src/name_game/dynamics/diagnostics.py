"""Stability, the self-naming preference and satisfiability of a preference distribution."""

import math

import numpy as np
import structlog

from name_game.core.models import (
    MASS_TOLERANCE,
    DiscretePrefMass,
    SatisfiabilityReport,
    SatisfiabilityRow,
    Verdict,
)
from name_game.dynamics.assignment import NameAssigner
from name_game.population.table import NameTable

logger = structlog.get_logger(__name__)


def is_stable(a: NameTable, b: NameTable, tol: float = 0.0) -> bool:
    """True iff no name's frequency moved by more than ``tol``."""
    fa, fb = a.aligned(b)
    return bool(np.max(np.abs(fa - fb)) <= tol)


def dweezil_preferences(table: NameTable) -> DiscretePrefMass:
    """Every parent wants exactly the popularity of their own name.

    Yields one ``(f, share)`` pair per distinct positive frequency, where ``share`` is the
    total frequency of names at that level. Zero-frequency names add nothing.
    """
    grouped: dict[float, float] = {}
    for freq in table.frequencies:
        if freq > 0.0:
            grouped[freq] = grouped.get(freq, 0.0) + freq
    total = math.fsum(grouped.values())
    scale = 1.0 if abs(total - 1.0) <= MASS_TOLERANCE else total
    return DiscretePrefMass(pairs=tuple((mu, grouped[mu] / scale) for mu in sorted(grouped)))


def _verdict(mu: float, demand: float, tol: float) -> Verdict | None:
    if mu == 0.0:
        return None
    if demand > mu + tol:
        return Verdict.OVERSHOOT
    if demand < mu - tol:
        return Verdict.UNDERSHOOT
    return Verdict.SATISFIED


def satisfiability_report(
    table_next: NameTable,
    g: DiscretePrefMass,
    tol: float = 1e-9,
    table_prev: NameTable | None = None,
) -> SatisfiabilityReport:
    """Compare demand ``g(mu)`` with ``mu`` at every desired popularity level.

    ``resulting`` is the mean frequency in ``table_next`` of the names parents wanting
    ``mu`` chose. The choice is made against ``table_prev`` when given, otherwise against
    ``table_next`` itself. Levels with ``mu == 0`` carry no verdict.
    """
    assigner = NameAssigner(table_prev if table_prev is not None else table_next)
    begin, end = assigner.spans(g.mus)
    next_freqs = np.array(
        [table_next.freq_of(name) for name in assigner.table.names], dtype=np.float64
    )

    rows = []
    for (mu, demand), b, e in zip(g.pairs, begin.tolist(), end.tolist(), strict=True):
        resulting = float(np.mean(next_freqs[assigner.members[b:e]]))
        rows.append(
            SatisfiabilityRow(
                mu=mu, demand=demand, resulting=resulting, verdict=_verdict(mu, demand, tol)
            )
        )

    report = SatisfiabilityReport(rows=rows, tolerance=tol)
    logger.info(
        "Satisfiability evaluated",
        levels=len(rows),
        satisfied=sum(row.verdict is Verdict.SATISFIED for row in rows),
        overshoot=sum(row.verdict is Verdict.OVERSHOOT for row in rows),
        undershoot=sum(row.verdict is Verdict.UNDERSHOOT for row in rows),
    )
    return report
