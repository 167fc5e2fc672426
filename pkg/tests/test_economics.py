"""Profitability: worked profit values, breakeven/threshold prices, and scans.

Hand-computed expectations use the default case data: unit variable cost
0.34 + 2.22 = 2.56, demand 90,000, and fixed costs of 34,169 per supplier,
69,401 per plant, 32,500 per line, 9,700 program fee.
"""

import pytest

from pharmrel import (
    BASELINE_ECONOMICS,
    BASELINE_RATES,
    Configuration,
    DegenerateComparisonError,
    EconomicsParams,
    InvalidParameterError,
    NoCrossingError,
    breakeven_price,
    expected_profit,
    profit_scan,
    system_reliability,
    threshold_price,
    total_fixed_cost,
)

LEAN = Configuration(1, 1, 1)
BACKUP_SUPPLIER = Configuration(2, 1, 1)
BACKUP_BOTH = Configuration(2, 2, 1)
CANDIDATES = (LEAN, BACKUP_SUPPLIER, Configuration(1, 2, 1), BACKUP_BOTH)


class TestFixedCostAndProfit:
    def test_lean_fixed_cost(self):
        assert total_fixed_cost(LEAN, BASELINE_ECONOMICS) == 145_770.0

    def test_line_fee_is_company_cost_only(self):
        # Two plants with two lines each: four line charges, no line fee.
        cfg = Configuration(1, 2, 2)
        assert total_fixed_cost(cfg, BASELINE_ECONOMICS) == (
            34_169 + 2 * 69_401 + 4 * 32_500 + 9_700
        )

    def test_lean_profit_at_default_price(self):
        r = system_reliability(LEAN, BASELINE_RATES)
        expected = 90_000 * r * (5.55 - 2.56) - 145_770.0
        assert expected_profit(LEAN, BASELINE_RATES, BASELINE_ECONOMICS) == pytest.approx(expected)
        assert expected == pytest.approx(96_650, abs=5)

    def test_profit_near_zero_at_breakeven_price(self):
        assert expected_profit(LEAN, BASELINE_RATES, BASELINE_ECONOMICS, price=4.36) == pytest.approx(
            0.0, abs=200.0
        )

    def test_zero_margin_leaves_negated_fixed_cost(self):
        value = expected_profit(LEAN, BASELINE_RATES, BASELINE_ECONOMICS, price=2.56)
        assert value == pytest.approx(-145_770.0)

    def test_profit_affine_increasing_in_price(self):
        r = system_reliability(BACKUP_BOTH, BASELINE_RATES)
        p1 = expected_profit(BACKUP_BOTH, BASELINE_RATES, BASELINE_ECONOMICS, price=10.0)
        p2 = expected_profit(BACKUP_BOTH, BASELINE_RATES, BASELINE_ECONOMICS, price=11.0)
        p3 = expected_profit(BACKUP_BOTH, BASELINE_RATES, BASELINE_ECONOMICS, price=12.0)
        assert p2 - p1 == pytest.approx(90_000 * r)
        assert p3 - p2 == pytest.approx(p2 - p1)


class TestBreakeven:
    @pytest.mark.parametrize(
        "cfg,expected",
        [(LEAN, 4.36), (BACKUP_SUPPLIER, 4.64), (BACKUP_BOTH, 5.71)],
        ids=["lean", "backup-supplier", "backup-supplier-and-plant"],
    )
    def test_published_breakeven_prices(self, cfg, expected):
        assert breakeven_price(cfg, BASELINE_RATES, BASELINE_ECONOMICS) == pytest.approx(
            expected, abs=0.005
        )

    @pytest.mark.parametrize("cfg", CANDIDATES, ids=lambda c: c.label())
    def test_breakeven_is_profit_root_with_sign_change(self, cfg):
        q0 = breakeven_price(cfg, BASELINE_RATES, BASELINE_ECONOMICS)
        at = expected_profit(cfg, BASELINE_RATES, BASELINE_ECONOMICS, price=q0)
        assert at == pytest.approx(0.0, abs=1e-6 * total_fixed_cost(cfg, BASELINE_ECONOMICS))
        below = expected_profit(cfg, BASELINE_RATES, BASELINE_ECONOMICS, price=q0 - 0.01)
        above = expected_profit(cfg, BASELINE_RATES, BASELINE_ECONOMICS, price=q0 + 0.01)
        assert below < 0.0 < above


class TestThreshold:
    def test_backup_supplier_threshold(self):
        assert threshold_price(LEAN, BACKUP_SUPPLIER, BASELINE_RATES, BASELINE_ECONOMICS) == pytest.approx(
            9.06, abs=0.005
        )

    def test_backup_both_threshold(self):
        assert threshold_price(
            BACKUP_SUPPLIER, BACKUP_BOTH, BASELINE_RATES, BASELINE_ECONOMICS
        ) == pytest.approx(34.76, abs=0.005)

    def test_symmetry(self):
        assert threshold_price(LEAN, BACKUP_BOTH, BASELINE_RATES, BASELINE_ECONOMICS) == pytest.approx(
            threshold_price(BACKUP_BOTH, LEAN, BASELINE_RATES, BASELINE_ECONOMICS), rel=1e-15
        )

    def test_equal_profit_at_threshold(self):
        q = threshold_price(LEAN, BACKUP_SUPPLIER, BASELINE_RATES, BASELINE_ECONOMICS)
        a = expected_profit(LEAN, BASELINE_RATES, BASELINE_ECONOMICS, price=q)
        b = expected_profit(BACKUP_SUPPLIER, BASELINE_RATES, BASELINE_ECONOMICS, price=q)
        assert a == pytest.approx(b, abs=1e-6)
        # Above the threshold the more reliable configuration wins.
        assert expected_profit(
            BACKUP_SUPPLIER, BASELINE_RATES, BASELINE_ECONOMICS, price=q + 1
        ) > expected_profit(LEAN, BASELINE_RATES, BASELINE_ECONOMICS, price=q + 1)

    def test_same_configuration_is_degenerate(self):
        with pytest.raises(DegenerateComparisonError):
            threshold_price(LEAN, LEAN, BASELINE_RATES, BASELINE_ECONOMICS)

    def test_equal_reliability_different_cost_never_crosses(self):
        # A line that recovers in ~1e-30 years has unavailability that
        # underflows to exactly zero, so adding a second line changes the
        # fixed cost but not the (double-precision) reliability.
        from pharmrel import ComponentRates, EchelonRates

        rates = EchelonRates(
            supplier=BASELINE_RATES.supplier,
            plant=BASELINE_RATES.plant,
            line=ComponentRates(mean_time_to_fail=1.0, mean_time_to_recover=1e-30),
        )
        assert system_reliability(Configuration(1, 1, 1), rates) == system_reliability(
            Configuration(1, 1, 2), rates
        )
        with pytest.raises(NoCrossingError):
            threshold_price(
                Configuration(1, 1, 1), Configuration(1, 1, 2), rates, BASELINE_ECONOMICS
            )


class TestProfitScan:
    def test_switch_points_bracket_closed_form_thresholds(self):
        curve = profit_scan(CANDIDATES, BASELINE_RATES, BASELINE_ECONOMICS, 0.0, 50.0, 0.25)
        switches = curve.switch_prices()
        # Initial state: nothing profitable.
        assert switches[0] == (0.0, None)
        order = [cfg.label() for _, cfg in switches[1:]]
        assert order == ["1-1-1", "2-1-1", "2-2-1"]
        switch_prices = [price for price, _ in switches[1:]]
        for observed, closed in zip(switch_prices, (4.3579, 9.0572, 34.7614)):
            assert observed - 0.25 <= closed <= observed

    def test_default_price_picks_lean(self):
        curve = profit_scan(CANDIDATES, BASELINE_RATES, BASELINE_ECONOMICS, 5.55, 5.55, 0.25)
        assert curve.best[0] == LEAN

    def test_no_produce_region_below_first_breakeven(self):
        curve = profit_scan(CANDIDATES, BASELINE_RATES, BASELINE_ECONOMICS, 0.0, 4.0, 0.5)
        assert all(winner is None for winner in curve.best)

    def test_empty_candidate_set(self):
        curve = profit_scan((), BASELINE_RATES, BASELINE_ECONOMICS, 0.0, 10.0, 1.0)
        assert curve.configurations == ()
        assert all(winner is None for winner in curve.best)

    def test_bad_ranges(self):
        with pytest.raises(InvalidParameterError):
            profit_scan(CANDIDATES, BASELINE_RATES, BASELINE_ECONOMICS, 10.0, 0.0, 0.25)
        with pytest.raises(InvalidParameterError):
            profit_scan(CANDIDATES, BASELINE_RATES, BASELINE_ECONOMICS, 0.0, 10.0, 0.0)

    def test_thresholds_reported_for_crossing_pairs(self):
        curve = profit_scan(CANDIDATES, BASELINE_RATES, BASELINE_ECONOMICS, 0.0, 1.0, 1.0)
        pairs = {(a.label(), b.label()): v for a, b, v in curve.thresholds}
        assert pairs[("1-1-1", "2-1-1")] == pytest.approx(9.06, abs=0.005)
        assert pairs[("2-1-1", "2-2-1")] == pytest.approx(34.76, abs=0.005)


class TestValidation:
    def test_negative_cost_rejected(self):
        with pytest.raises(InvalidParameterError):
            EconomicsParams(raw_material_cost=-1.0)

    def test_zero_demand_rejected(self):
        with pytest.raises(InvalidParameterError):
            EconomicsParams(annual_demand=0.0)
