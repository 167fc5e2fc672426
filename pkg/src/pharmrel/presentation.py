"""Rounding and output formatting.

The engine always returns full-precision values; this module applies the
reporting conventions (shortage to the nearest 1% for headline comparisons or
0.1% for dense tables, times to the nearest 0.1 year) and renders CSV and
fixed-width tables.  CSV carries 17 significant digits so parsing it back
reproduces the original doubles exactly.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

from .reliability import ReliabilityReport
from .scenario import SweepRow

__all__ = [
    "SWEEP_COLUMNS",
    "round_half_up",
    "format_percent",
    "format_years",
    "format_full",
    "report_presentation",
    "sweep_row_record",
    "rows_to_csv",
    "render_table",
]

#: Fixed column order for sweep CSV output and service row payloads.
SWEEP_COLUMNS = (
    "z_api",
    "z_p",
    "z_l",
    "dis_mult",
    "rec_mult",
    "r",
    "s",
    "r_api",
    "r_pl",
    "crit_api",
    "crit_plant",
    "crit_line",
    "mean_uptime",
    "mean_downtime",
)


def round_half_up(value: float, decimals: int = 0) -> float:
    """Round half away from zero (round() would round 0.5 ties to even)."""
    scale = 10.0**decimals
    if value >= 0:
        return math.floor(value * scale + 0.5) / scale
    return -math.floor(-value * scale + 0.5) / scale


def format_percent(fraction: float, decimals: int = 0) -> str:
    return f"{round_half_up(100.0 * fraction, decimals):.{decimals}f}%"


def format_years(years: float) -> str:
    return f"{round_half_up(years, 1):.1f}"


def format_full(value: float) -> str:
    """17 significant digits: enough for exact float round-trips."""
    return f"{value:.17g}"


def report_presentation(report: ReliabilityReport) -> dict[str, str]:
    """Rounded display strings for one report."""
    return {
        "shortage_pct": format_percent(report.shortage, 0),
        "shortage_pct_fine": format_percent(report.shortage, 1),
        "mean_uptime_years": format_years(report.mean_uptime),
        "mean_downtime_years": format_years(report.mean_downtime),
    }


def sweep_row_record(row: SweepRow) -> dict[str, float | int]:
    """One sweep row as a flat record keyed by SWEEP_COLUMNS."""
    cfg, rep = row.configuration, row.report
    return {
        "z_api": cfg.suppliers,
        "z_p": cfg.plants,
        "z_l": cfg.lines_per_plant,
        "dis_mult": row.multipliers.disruption,
        "rec_mult": row.multipliers.recovery,
        "r": rep.reliability,
        "s": rep.shortage,
        "r_api": rep.supplier_stage,
        "r_pl": rep.production_stage,
        "crit_api": rep.supplier_criticality,
        "crit_plant": rep.plant_criticality,
        "crit_line": rep.line_criticality,
        "mean_uptime": rep.mean_uptime,
        "mean_downtime": rep.mean_downtime,
    }


def _cell(value: float | int) -> str:
    if isinstance(value, int):
        return str(value)
    return format_full(value)


def rows_to_csv(rows: Iterable[SweepRow]) -> str:
    lines = [",".join(SWEEP_COLUMNS)]
    for row in rows:
        record = sweep_row_record(row)
        lines.append(",".join(_cell(record[col]) for col in SWEEP_COLUMNS))
    return "\n".join(lines) + "\n"


def render_table(header: Sequence[str], body: Sequence[Sequence[str]]) -> str:
    """Fixed-width text table."""
    widths = [len(h) for h in header]
    for row in body:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(header)),
        "  ".join("-" * w for w in widths),
    ]
    for row in body:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
    return "\n".join(lines) + "\n"
