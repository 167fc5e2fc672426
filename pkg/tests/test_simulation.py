"""Simulator behavior: determinism, episode accounting, and statistical sanity.

Heavier statistical validation against the closed forms lives in the
acceptance suite; tests here keep horizons short.
"""

import numpy as np
import pytest

from pharmrel import (
    BASELINE_RATES,
    Configuration,
    InvalidParameterError,
    SimulationSpec,
    mean_downtime,
    mean_uptime,
    simulate,
    system_reliability,
)


@pytest.fixture
def short_spec() -> SimulationSpec:
    return SimulationSpec(horizon=20_000.0, replications=4, seed=7)


class TestSpecValidation:
    def test_zero_replications(self):
        with pytest.raises(InvalidParameterError):
            SimulationSpec(horizon=100.0, replications=0)

    def test_negative_horizon(self):
        with pytest.raises(InvalidParameterError):
            SimulationSpec(horizon=-1.0)

    def test_warmup_beyond_horizon(self):
        with pytest.raises(InvalidParameterError):
            SimulationSpec(horizon=10.0, warmup=10.0)

    def test_short_horizon_warns_but_runs(self, lean):
        with pytest.warns(UserWarning, match="horizon"):
            spec = SimulationSpec(horizon=50.0, replications=1, seed=1)
            result = simulate(lean, BASELINE_RATES, spec)
        assert 0.0 <= result.availability <= 1.0


class TestDeterminism:
    def test_same_seed_same_result(self, lean, short_spec):
        a = simulate(lean, BASELINE_RATES, short_spec)
        b = simulate(lean, BASELINE_RATES, short_spec)
        assert a == b

    def test_workers_do_not_change_result(self, lean, short_spec):
        a = simulate(lean, BASELINE_RATES, short_spec, workers=1)
        b = simulate(lean, BASELINE_RATES, short_spec, workers=4)
        assert a == b

    def test_different_seeds_differ(self, lean, short_spec):
        other = SimulationSpec(
            horizon=short_spec.horizon, replications=short_spec.replications, seed=8
        )
        assert simulate(lean, BASELINE_RATES, short_spec) != simulate(
            lean, BASELINE_RATES, other
        )


class TestEpisodeAccounting:
    def test_up_and_down_episodes_alternate(self, five_configs, short_spec):
        for cfg in five_configs:
            result = simulate(cfg, BASELINE_RATES, short_spec)
            for rep in result.replications:
                assert abs(rep.up_episodes - rep.down_episodes) <= 1

    def test_shortage_count_totals_replications(self, lean, short_spec):
        result = simulate(lean, BASELINE_RATES, short_spec)
        assert result.shortage_episode_count == sum(
            rep.down_episodes for rep in result.replications
        )

    def test_warmup_excluded_from_average(self, lean):
        base = SimulationSpec(horizon=5_000.0, replications=2, seed=3)
        warm = SimulationSpec(horizon=5_000.0, replications=2, seed=3, warmup=500.0)
        a = simulate(lean, BASELINE_RATES, base)
        b = simulate(lean, BASELINE_RATES, warm)
        # Same transition streams, different averaging window.
        assert a.availability != b.availability


class TestStatisticalSanity:
    def test_lean_brackets_closed_forms(self, lean):
        spec = SimulationSpec(horizon=100_000.0, replications=6, seed=11)
        result = simulate(lean, BASELINE_RATES, spec)
        r = system_reliability(lean, BASELINE_RATES)
        assert abs(result.availability - r) <= 3 * result.availability_se
        assert abs(result.mean_uptime - mean_uptime(lean, BASELINE_RATES)) <= 3 * result.mean_uptime_se
        assert abs(result.mean_downtime - mean_downtime(lean, BASELINE_RATES)) <= 3 * result.mean_downtime_se

    def test_standard_errors_nonnegative(self, lean, short_spec):
        result = simulate(lean, BASELINE_RATES, short_spec)
        assert result.availability_se >= 0.0
        assert result.mean_uptime_se >= 0.0
        assert result.mean_downtime_se >= 0.0

    def test_availability_within_unit_interval(self, five_configs, short_spec):
        for cfg in five_configs:
            result = simulate(cfg, BASELINE_RATES, short_spec)
            assert 0.0 < result.availability < 1.0
            for rep in result.replications:
                assert 0.0 <= rep.availability <= 1.0

    def test_time_average_consistent_with_episodes(self, lean):
        # Up-time from complete episodes is a lower bound on total up time.
        spec = SimulationSpec(horizon=50_000.0, replications=1, seed=5)
        result = simulate(lean, BASELINE_RATES, spec)
        rep = result.replications[0]
        episode_up_total = rep.mean_uptime * rep.up_episodes
        assert episode_up_total <= rep.availability * spec.horizon + 1e-9
