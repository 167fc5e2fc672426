"""Profitability of supply chain configurations under a given unit price.

Expected annual profit is revenue on the demand actually met, minus variable
costs, minus the fixed cost of running the chosen configuration:

    profit = demand * reliability * (price - raw - production)
             - fixed(configuration)

where fixed() charges each supplier and plant its annual company cost plus
regulatory fee, each line its company cost (lines carry no separate fee), and
one program-level fee.

From that affine form follow the breakeven price of a configuration (profit
exactly zero) and the threshold price at which a more reliable configuration
overtakes a less reliable one.  Profit itself may be negative; the scan-level
"do not produce" option (profit floored at zero) is applied only when ranking
configurations by price.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import DegenerateComparisonError, InvalidParameterError, NoCrossingError
from .reliability import BASELINE_RATES, Configuration, EchelonRates, system_reliability

__all__ = [
    "EconomicsParams",
    "BASELINE_ECONOMICS",
    "ProfitCurve",
    "total_fixed_cost",
    "expected_profit",
    "breakeven_price",
    "threshold_price",
    "profit_scan",
]


def _require_nonnegative(name: str, value: float) -> float:
    value = float(value)
    if not value >= 0.0 or value != value:
        raise InvalidParameterError(f"{name} must be >= 0, got {value!r}")
    return value


@dataclass(frozen=True)
class EconomicsParams:
    """Annual fixed costs, per-ml variable costs, unit price, and demand.

    Defaults are the vincristine sulfate case data (2018 USD).
    """

    supplier_fixed_cost: float = 33_000.0
    supplier_fee: float = 1_169.0
    plant_fixed_cost: float = 65_000.0
    plant_fee: float = 4_401.0
    line_fixed_cost: float = 32_500.0
    program_fee: float = 9_700.0
    raw_material_cost: float = 0.34
    production_cost: float = 2.22
    unit_price: float = 5.55
    annual_demand: float = 90_000.0

    def __post_init__(self) -> None:
        for name in (
            "supplier_fixed_cost",
            "supplier_fee",
            "plant_fixed_cost",
            "plant_fee",
            "line_fixed_cost",
            "program_fee",
            "raw_material_cost",
            "production_cost",
            "unit_price",
        ):
            _require_nonnegative(name, getattr(self, name))
        if not self.annual_demand > 0.0:
            raise InvalidParameterError(f"annual_demand must be > 0, got {self.annual_demand!r}")

    @property
    def unit_variable_cost(self) -> float:
        return self.raw_material_cost + self.production_cost


BASELINE_ECONOMICS = EconomicsParams()


def total_fixed_cost(cfg: Configuration, econ: EconomicsParams) -> float:
    """Annual fixed cost of maintaining the configuration."""
    return (
        (econ.supplier_fixed_cost + econ.supplier_fee) * cfg.suppliers
        + (econ.plant_fixed_cost + econ.plant_fee) * cfg.plants
        + econ.line_fixed_cost * cfg.total_lines
        + econ.program_fee
    )


def expected_profit(
    cfg: Configuration,
    rates: EchelonRates,
    econ: EconomicsParams,
    price: float | None = None,
) -> float:
    """Expected annual profit at the given unit price (econ.unit_price when omitted).

    Returns the raw value, which is negative below the breakeven price.
    """
    q = econ.unit_price if price is None else float(price)
    r = system_reliability(cfg, rates)
    return econ.annual_demand * r * (q - econ.unit_variable_cost) - total_fixed_cost(cfg, econ)


def breakeven_price(
    cfg: Configuration,
    rates: EchelonRates,
    econ: EconomicsParams,
) -> float:
    """Unit price at which expected profit is exactly zero.

    Covers the variable cost plus the fixed cost spread over the demand the
    configuration is actually expected to meet.
    """
    r = system_reliability(cfg, rates)
    return econ.unit_variable_cost + total_fixed_cost(cfg, econ) / (econ.annual_demand * r)


def threshold_price(
    cfg_a: Configuration,
    cfg_b: Configuration,
    rates: EchelonRates,
    econ: EconomicsParams,
) -> float:
    """Unit price at which the two configurations earn equal expected profit.

    Above it, the higher-reliability configuration is strictly more
    profitable.  Symmetric in its arguments.
    """
    r_a = system_reliability(cfg_a, rates)
    r_b = system_reliability(cfg_b, rates)
    delta_fixed = total_fixed_cost(cfg_b, econ) - total_fixed_cost(cfg_a, econ)
    delta_r = r_b - r_a
    if delta_r == 0.0:
        if delta_fixed == 0.0:
            raise DegenerateComparisonError(
                f"{cfg_a.label()} and {cfg_b.label()} have identical reliability and "
                "fixed cost; profits are equal at every price"
            )
        raise NoCrossingError(
            f"{cfg_a.label()} and {cfg_b.label()} have identical reliability but "
            "different fixed costs; their profits never cross"
        )
    return econ.unit_variable_cost + delta_fixed / (econ.annual_demand * delta_r)


@dataclass(frozen=True)
class ProfitCurve:
    """Per-price profits for a set of configurations plus derived summaries.

    ``best[i]`` is the most profitable configuration at ``prices[i]`` with the
    do-not-produce floor applied (None when nothing is profitable); ties break
    toward fewer total components, then lexicographically.  ``thresholds``
    holds the closed-form crossing price for every configuration pair that
    has one.
    """

    configurations: tuple[Configuration, ...]
    prices: tuple[float, ...]
    profits: tuple[tuple[float, ...], ...]
    best: tuple[Configuration | None, ...]
    breakeven_prices: tuple[float, ...]
    thresholds: tuple[tuple[Configuration, Configuration, float], ...]

    def switch_prices(self) -> list[tuple[float, Configuration | None]]:
        """Scan prices at which the most profitable configuration changes.

        The first entry records the state at the lowest scanned price.
        """
        out: list[tuple[float, Configuration | None]] = []
        for price, winner in zip(self.prices, self.best):
            if not out or winner != out[-1][1]:
                out.append((price, winner))
        return out


def profit_scan(
    configurations: Sequence[Configuration],
    rates: EchelonRates = BASELINE_RATES,
    econ: EconomicsParams = BASELINE_ECONOMICS,
    price_min: float = 0.0,
    price_max: float = 50.0,
    step: float = 0.25,
) -> ProfitCurve:
    """Profit of each configuration over a price grid, with the per-price argmax."""
    if not price_min <= price_max:
        raise InvalidParameterError(
            f"price range must satisfy price_min <= price_max, got {price_min}..{price_max}"
        )
    if not step > 0.0:
        raise InvalidParameterError(f"step must be > 0, got {step!r}")

    cfgs = tuple(configurations)
    n_steps = int((price_max - price_min) / step + 1e-9)
    prices = tuple(price_min + i * step for i in range(n_steps + 1))
    profits = tuple(
        tuple(expected_profit(cfg, rates, econ, price=p) for p in prices) for cfg in cfgs
    )

    def tie_key(cfg: Configuration) -> tuple[int, int, int, int]:
        return (cfg.total_components, cfg.suppliers, cfg.plants, cfg.lines_per_plant)

    best: list[Configuration | None] = []
    for i in range(len(prices)):
        winner: Configuration | None = None
        winner_profit = 0.0
        for c, cfg in enumerate(cfgs):
            value = profits[c][i]
            if value > winner_profit or (
                value == winner_profit
                and winner is not None
                and value > 0.0
                and tie_key(cfg) < tie_key(winner)
            ):
                winner, winner_profit = cfg, value
        best.append(winner)

    thresholds = []
    for i in range(len(cfgs)):
        for j in range(i + 1, len(cfgs)):
            try:
                thresholds.append((cfgs[i], cfgs[j], threshold_price(cfgs[i], cfgs[j], rates, econ)))
            except (NoCrossingError, DegenerateComparisonError):
                continue

    return ProfitCurve(
        configurations=cfgs,
        prices=prices,
        profits=profits,
        best=tuple(best),
        breakeven_prices=tuple(breakeven_price(cfg, rates, econ) for cfg in cfgs),
        thresholds=tuple(thresholds),
    )
