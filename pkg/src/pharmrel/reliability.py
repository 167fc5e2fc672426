"""Closed-form reliability of a three-echelon drug supply chain.

The supply chain has raw-material suppliers feeding a set of manufacturing
plants, each plant containing identical production lines.  The two stages
(suppliers; plant-line combinations) are in series, components within a stage
are in parallel, and each plant is in series with its own lines.  Every
component alternates between "up" and "down" with exponentially distributed
durations, so its steady-state availability is mtf / (mtf + mtr).

All times are in years.  Rates are stored as mean times (the reciprocals of
the failure and recovery rates) because that is how disruption data is
usually reported.

Outputs, all in steady state:

  reliability        long-run fraction of time demand can be met
  shortage           1 - reliability
  criticality        probability a given component's failure takes the
                     system down (availability given the component is up
                     minus availability given it is down)
  mean uptime        average duration of a system-up interval
  mean downtime      average duration of a shortage

Mean uptime is the system availability divided by the rate at which
individual component transitions cause system failures; the downtime then
follows from the ergodic identity uptime / (uptime + downtime) = reliability.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameterError

__all__ = [
    "Configuration",
    "ComponentRates",
    "EchelonRates",
    "RateMultipliers",
    "ReliabilityReport",
    "BASELINE_RATES",
    "component_availability",
    "supplier_stage_reliability",
    "production_stage_reliability",
    "system_reliability",
    "expected_shortage",
    "supplier_criticality",
    "plant_criticality",
    "line_criticality",
    "mean_uptime",
    "mean_downtime",
    "evaluate",
]


def _require_positive_int(name: str, value: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InvalidParameterError(f"{name} must be an integer >= 1, got {value!r}")
    return value


def _require_positive_finite(name: str, value: float) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise InvalidParameterError(f"{name} must be a positive number, got {value!r}") from None
    if not math.isfinite(value) or value <= 0.0:
        raise InvalidParameterError(f"{name} must be positive and finite, got {value!r}")
    return value


def _ipow(base: float, exponent: int) -> float:
    # Repeated multiplication is exact(er) than pow() for the small integer
    # exponents that occur here; fall back to pow() for large ones.
    if exponent <= 64:
        out = 1.0
        for _ in range(exponent):
            out *= base
        return out
    return base**exponent


@dataclass(frozen=True)
class Configuration:
    """Component counts per echelon; every plant has the same number of lines."""

    suppliers: int
    plants: int
    lines_per_plant: int

    def __post_init__(self) -> None:
        _require_positive_int("suppliers", self.suppliers)
        _require_positive_int("plants", self.plants)
        _require_positive_int("lines_per_plant", self.lines_per_plant)

    @property
    def total_lines(self) -> int:
        return self.plants * self.lines_per_plant

    @property
    def total_components(self) -> int:
        return self.suppliers + self.plants + self.total_lines

    def label(self) -> str:
        return f"{self.suppliers}-{self.plants}-{self.lines_per_plant}"


@dataclass(frozen=True)
class ComponentRates:
    """Mean time to fail and to recover, in years, for one component type."""

    mean_time_to_fail: float
    mean_time_to_recover: float

    def __post_init__(self) -> None:
        _require_positive_finite("mean_time_to_fail", self.mean_time_to_fail)
        _require_positive_finite("mean_time_to_recover", self.mean_time_to_recover)

    @property
    def availability(self) -> float:
        return self.mean_time_to_fail / (self.mean_time_to_fail + self.mean_time_to_recover)

    @property
    def cycle_time(self) -> float:
        """Mean length of one up-down cycle (also 1 / (failure rate * availability))."""
        return self.mean_time_to_fail + self.mean_time_to_recover


@dataclass(frozen=True)
class EchelonRates:
    supplier: ComponentRates
    plant: ComponentRates
    line: ComponentRates

    def scaled(self, multipliers: "RateMultipliers") -> "EchelonRates":
        """Apply rate multipliers: disruption scales failure rates, recovery scales recovery rates."""
        d = multipliers.disruption
        r = multipliers.recovery
        if d == 1.0 and r == 1.0:
            return self

        def scale(c: ComponentRates) -> ComponentRates:
            return ComponentRates(c.mean_time_to_fail / d, c.mean_time_to_recover / r)

        return EchelonRates(scale(self.supplier), scale(self.plant), scale(self.line))


@dataclass(frozen=True)
class RateMultipliers:
    """Uniform multipliers on all failure rates and all recovery rates; (1, 1) is the baseline."""

    disruption: float = 1.0
    recovery: float = 1.0

    def __post_init__(self) -> None:
        _require_positive_finite("disruption multiplier", self.disruption)
        _require_positive_finite("recovery multiplier", self.recovery)


#: Baseline component characteristics for a generic injectable oncology drug
#: (mean years to fail / to recover, estimated from public shortage records).
BASELINE_RATES = EchelonRates(
    supplier=ComponentRates(mean_time_to_fail=17.3, mean_time_to_recover=1.2),
    plant=ComponentRates(mean_time_to_fail=28.2, mean_time_to_recover=0.8),
    line=ComponentRates(mean_time_to_fail=8.5, mean_time_to_recover=0.08),
)


@dataclass(frozen=True)
class ReliabilityReport:
    """Full steady-state evaluation of one configuration."""

    reliability: float
    shortage: float
    supplier_stage: float
    production_stage: float
    supplier_criticality: float
    plant_criticality: float
    line_criticality: float
    mean_uptime: float
    mean_downtime: float


def component_availability(mean_time_to_fail: float, mean_time_to_recover: float) -> float:
    """Steady-state probability a single component is up."""
    mtf = _require_positive_finite("mean_time_to_fail", mean_time_to_fail)
    mtr = _require_positive_finite("mean_time_to_recover", mean_time_to_recover)
    return mtf / (mtf + mtr)


def supplier_stage_reliability(cfg: Configuration, rates: EchelonRates) -> float:
    """Probability at least one supplier is up."""
    down = 1.0 - rates.supplier.availability
    return 1.0 - _ipow(down, cfg.suppliers)


def _plant_group_down(cfg: Configuration, rates: EchelonRates) -> float:
    """Probability one plant-line group is unusable: plant down, or plant up with every line down."""
    a_plant = rates.plant.availability
    line_down = 1.0 - rates.line.availability
    return (1.0 - a_plant) + a_plant * _ipow(line_down, cfg.lines_per_plant)


def production_stage_reliability(cfg: Configuration, rates: EchelonRates) -> float:
    """Probability at least one plant-line combination is up."""
    return 1.0 - _ipow(_plant_group_down(cfg, rates), cfg.plants)


def system_reliability(cfg: Configuration, rates: EchelonRates) -> float:
    """Long-run probability the supply chain can meet demand (both stages up)."""
    return supplier_stage_reliability(cfg, rates) * production_stage_reliability(cfg, rates)


def expected_shortage(cfg: Configuration, rates: EchelonRates) -> float:
    """Long-run fraction of time demand cannot be met."""
    return 1.0 - system_reliability(cfg, rates)


def supplier_criticality(cfg: Configuration, rates: EchelonRates) -> float:
    """Probability one supplier's failure takes the system down.

    The production stage must be up and every other supplier must be down.
    """
    down = 1.0 - rates.supplier.availability
    return production_stage_reliability(cfg, rates) * _ipow(down, cfg.suppliers - 1)


def plant_criticality(cfg: Configuration, rates: EchelonRates) -> float:
    """Probability one plant's failure takes the system down.

    The supplier stage must be up, the plant must have at least one working
    line, and every other plant-line group must be down.
    """
    line_down = 1.0 - rates.line.availability
    own_lines_up = 1.0 - _ipow(line_down, cfg.lines_per_plant)
    others_down = _ipow(_plant_group_down(cfg, rates), cfg.plants - 1)
    return supplier_stage_reliability(cfg, rates) * own_lines_up * others_down


def line_criticality(cfg: Configuration, rates: EchelonRates) -> float:
    """Probability one line's failure takes the system down.

    The supplier stage must be up, the line's plant must be up with all its
    other lines down, and every other plant-line group must be down.
    """
    line_down = 1.0 - rates.line.availability
    siblings_down = _ipow(line_down, cfg.lines_per_plant - 1)
    others_down = _ipow(_plant_group_down(cfg, rates), cfg.plants - 1)
    return (
        supplier_stage_reliability(cfg, rates)
        * rates.plant.availability
        * siblings_down
        * others_down
    )


def mean_uptime(cfg: Configuration, rates: EchelonRates) -> float:
    """Average time between shortages, in years.

    System availability divided by the aggregate rate at which component
    transitions bring the system down.  Each component contributes
    1 / (mtf + mtr) transitions-that-matter per year (that quotient equals
    lambda*mu/(lambda+mu)) weighted by its criticality; lines number
    plants * lines_per_plant in total.
    """
    r = system_reliability(cfg, rates)
    failure_rate = (
        cfg.suppliers * supplier_criticality(cfg, rates) / rates.supplier.cycle_time
        + cfg.plants * plant_criticality(cfg, rates) / rates.plant.cycle_time
        + cfg.total_lines * line_criticality(cfg, rates) / rates.line.cycle_time
    )
    return r / failure_rate


def mean_downtime(cfg: Configuration, rates: EchelonRates) -> float:
    """Average duration of a shortage, in years."""
    up = mean_uptime(cfg, rates)
    return up / system_reliability(cfg, rates) - up


def evaluate(
    cfg: Configuration,
    rates: EchelonRates = BASELINE_RATES,
    multipliers: RateMultipliers | None = None,
) -> ReliabilityReport:
    """Evaluate every closed-form output for one configuration."""
    if multipliers is not None:
        rates = rates.scaled(multipliers)
    r = system_reliability(cfg, rates)
    up = mean_uptime(cfg, rates)
    return ReliabilityReport(
        reliability=r,
        shortage=1.0 - r,
        supplier_stage=supplier_stage_reliability(cfg, rates),
        production_stage=production_stage_reliability(cfg, rates),
        supplier_criticality=supplier_criticality(cfg, rates),
        plant_criticality=plant_criticality(cfg, rates),
        line_criticality=line_criticality(cfg, rates),
        mean_uptime=up,
        mean_downtime=up / r - up,
    )
