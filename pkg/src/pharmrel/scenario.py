"""Batch scenario evaluation: configuration factorials and rate-multiplier sweeps.

Rows are plain closed-form evaluations, ordered deterministically
(configuration lexicographic by (suppliers, plants, lines_per_plant), then
disruption multiplier, then recovery multiplier).  A multiplier of 1.0
reproduces the baseline evaluation bit for bit.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import product

from .errors import InvalidParameterError
from .reliability import (
    BASELINE_RATES,
    Configuration,
    EchelonRates,
    RateMultipliers,
    ReliabilityReport,
    evaluate,
)

__all__ = [
    "DEFAULT_DISRUPTION_MULTIPLIERS",
    "DEFAULT_RECOVERY_MULTIPLIERS",
    "DEFAULT_COMPARISON_CONFIGURATIONS",
    "SweepSpec",
    "SweepRow",
    "run_sweep",
    "factorial_configurations",
    "multiplier_sweep",
    "combined_strategies",
]

#: Default multiplier grids for disruption- and recovery-rate what-if sweeps.
DEFAULT_DISRUPTION_MULTIPLIERS = (0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0)
DEFAULT_RECOVERY_MULTIPLIERS = (0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0)

#: The five configurations used throughout the comparative analyses:
#: lean, backup line, backup plant, backup supplier, backup supplier + plant.
DEFAULT_COMPARISON_CONFIGURATIONS = (
    Configuration(1, 1, 1),
    Configuration(1, 1, 2),
    Configuration(1, 2, 1),
    Configuration(2, 1, 1),
    Configuration(2, 2, 1),
)


@dataclass(frozen=True)
class SweepSpec:
    """Inclusive count ranges per echelon crossed with multiplier grids."""

    supplier_range: tuple[int, int]
    plant_range: tuple[int, int]
    line_range: tuple[int, int]
    disruption_multipliers: tuple[float, ...] = (1.0,)
    recovery_multipliers: tuple[float, ...] = (1.0,)
    rates: EchelonRates = field(default=BASELINE_RATES)

    def __post_init__(self) -> None:
        for name, (lo, hi) in (
            ("supplier_range", self.supplier_range),
            ("plant_range", self.plant_range),
            ("line_range", self.line_range),
        ):
            if lo < 1 or hi < lo:
                raise InvalidParameterError(f"{name} must satisfy 1 <= lo <= hi, got {lo}..{hi}")
        if not self.disruption_multipliers or not self.recovery_multipliers:
            raise InvalidParameterError("multiplier lists must be non-empty")

    def configurations(self) -> list[Configuration]:
        return [
            Configuration(a, p, l)
            for a in range(self.supplier_range[0], self.supplier_range[1] + 1)
            for p in range(self.plant_range[0], self.plant_range[1] + 1)
            for l in range(self.line_range[0], self.line_range[1] + 1)
        ]

    def row_count(self) -> int:
        n_cfg = (
            (self.supplier_range[1] - self.supplier_range[0] + 1)
            * (self.plant_range[1] - self.plant_range[0] + 1)
            * (self.line_range[1] - self.line_range[0] + 1)
        )
        return n_cfg * len(self.disruption_multipliers) * len(self.recovery_multipliers)


@dataclass(frozen=True)
class SweepRow:
    configuration: Configuration
    multipliers: RateMultipliers
    report: ReliabilityReport


def _rows(
    configurations: Sequence[Configuration],
    pairs: Sequence[tuple[float, float]],
    rates: EchelonRates,
) -> list[SweepRow]:
    out = []
    for cfg in configurations:
        for dis, rec in pairs:
            mult = RateMultipliers(disruption=dis, recovery=rec)
            out.append(SweepRow(cfg, mult, evaluate(cfg, rates, mult)))
    return out


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    """Evaluate the full cross-product described by the spec."""
    pairs = list(product(spec.disruption_multipliers, spec.recovery_multipliers))
    return _rows(spec.configurations(), pairs, spec.rates)


def factorial_configurations(spec: SweepSpec) -> list[SweepRow]:
    """One row per configuration in the ranges, in lexicographic order."""
    return run_sweep(spec)


def multiplier_sweep(
    configurations: Sequence[Configuration],
    multipliers: Sequence[float],
    kind: str,
    rates: EchelonRates = BASELINE_RATES,
) -> list[SweepRow]:
    """Vary either the disruption or the recovery rate for a fixed set of configurations."""
    if kind not in ("disruption", "recovery"):
        raise InvalidParameterError(f"kind must be 'disruption' or 'recovery', got {kind!r}")
    if not multipliers:
        raise InvalidParameterError("multiplier list must be non-empty")
    if kind == "disruption":
        pairs = [(m, 1.0) for m in multipliers]
    else:
        pairs = [(1.0, m) for m in multipliers]
    return _rows(configurations, pairs, rates)


def combined_strategies(
    configurations: Sequence[Configuration],
    multiplier_pairs: Sequence[tuple[float, float]],
    rates: EchelonRates = BASELINE_RATES,
) -> list[SweepRow]:
    """Cross configurations with explicit (disruption, recovery) multiplier pairs."""
    if not multiplier_pairs:
        raise InvalidParameterError("multiplier pair list must be non-empty")
    return _rows(configurations, list(multiplier_pairs), rates)
