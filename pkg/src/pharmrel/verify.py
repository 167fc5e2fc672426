"""Cross-validation of the closed forms against the independent oracles.

Two batteries:

  * enumeration -- exhaustive stationary-state sums must match the closed-form
    reliability and criticalities to a hard tolerance (default 1e-12) across
    randomized rate sets and every configuration under a component cap;
  * simulation -- closed-form reliability, mean uptime, and mean downtime must
    fall inside 3-standard-error bands of the simulated estimates for the five
    comparison configurations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .oracle import (
    criticality_by_enumeration,
    enumerate_reliability,
    line_index,
    plant_index,
    supplier_index,
)
from .reliability import (
    BASELINE_RATES,
    ComponentRates,
    Configuration,
    EchelonRates,
    line_criticality,
    mean_downtime,
    mean_uptime,
    plant_criticality,
    supplier_criticality,
    system_reliability,
)
from .scenario import DEFAULT_COMPARISON_CONFIGURATIONS
from .simulation import DEFAULT_SEED, SimulationSpec, simulate

__all__ = ["CheckResult", "random_rates", "verify_enumeration", "verify_simulation"]

ENUMERATION_TOLERANCE = 1e-12


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def random_rates(rng: np.random.Generator) -> EchelonRates:
    """Random well-conditioned mean times (years) for randomized checks."""

    def component() -> ComponentRates:
        return ComponentRates(
            mean_time_to_fail=float(rng.uniform(0.5, 50.0)),
            mean_time_to_recover=float(rng.uniform(0.02, 5.0)),
        )

    return EchelonRates(supplier=component(), plant=component(), line=component())


def _configurations_up_to(max_components: int) -> list[Configuration]:
    out = []
    for a in range(1, 6):
        for p in range(1, 6):
            for l in range(1, 6):
                if a + p + p * l <= max_components:
                    out.append(Configuration(a, p, l))
    return out


def verify_enumeration(
    max_components: int = 12,
    rate_sets: int = 100,
    seed: int = DEFAULT_SEED,
    tolerance: float = ENUMERATION_TOLERANCE,
) -> list[CheckResult]:
    """Compare closed forms with exhaustive enumeration over randomized rates."""
    configs = _configurations_up_to(max_components)
    rng = np.random.default_rng(seed)
    worst_rel = 0.0
    worst_crit = 0.0
    for _ in range(rate_sets):
        rates = random_rates(rng)
        for cfg in configs:
            worst_rel = max(
                worst_rel,
                abs(enumerate_reliability(cfg, rates) - system_reliability(cfg, rates)),
            )
            closed = (
                supplier_criticality(cfg, rates),
                plant_criticality(cfg, rates),
                line_criticality(cfg, rates),
            )
            enumerated = (
                criticality_by_enumeration(cfg, rates, supplier_index(cfg, 0)),
                criticality_by_enumeration(cfg, rates, plant_index(cfg, 0)),
                criticality_by_enumeration(cfg, rates, line_index(cfg, 0, 0)),
            )
            worst_crit = max(
                worst_crit, max(abs(a - b) for a, b in zip(closed, enumerated))
            )
    checks = rate_sets * len(configs)
    return [
        CheckResult(
            name="enumeration reliability",
            passed=worst_rel <= tolerance,
            detail=f"worst |diff| {worst_rel:.3e} over {checks} checks (tolerance {tolerance:.0e})",
        ),
        CheckResult(
            name="enumeration criticality",
            passed=worst_crit <= tolerance,
            detail=f"worst |diff| {worst_crit:.3e} over {3 * checks} checks (tolerance {tolerance:.0e})",
        ),
    ]


def verify_simulation(
    horizon: float = 1e6,
    replications: int = 5,
    seed: int = DEFAULT_SEED,
    rates: EchelonRates = BASELINE_RATES,
    workers: int = 1,
) -> list[CheckResult]:
    """Check that closed forms sit inside 3-standard-error simulation bands."""
    spec = SimulationSpec(horizon=horizon, replications=replications, seed=seed)
    results = []
    for cfg in DEFAULT_COMPARISON_CONFIGURATIONS:
        sim = simulate(cfg, rates, spec, workers=workers)
        for metric, closed, empirical, se in (
            ("reliability", system_reliability(cfg, rates), sim.availability, sim.availability_se),
            ("mean uptime", mean_uptime(cfg, rates), sim.mean_uptime, sim.mean_uptime_se),
            ("mean downtime", mean_downtime(cfg, rates), sim.mean_downtime, sim.mean_downtime_se),
        ):
            deviation = abs(empirical - closed)
            results.append(
                CheckResult(
                    name=f"simulation {cfg.label()} {metric}",
                    passed=bool(deviation <= 3.0 * se),
                    detail=(
                        f"closed {closed:.6g}, simulated {empirical:.6g} "
                        f"+- {se:.2g} (|diff| = {deviation / se if se else float('inf'):.2f} se)"
                    ),
                )
            )
    return results
