"""HTTP service: payload correctness, error model, numeric identity with the library."""

import pytest
from fastapi.testclient import TestClient

from pharmrel import (
    BASELINE_RATES,
    Configuration,
    RateMultipliers,
    SimulationSpec,
    evaluate,
    mean_uptime,
    simulate,
)
from pharmrel.service import create_app


@pytest.fixture(scope="module")
def client() -> TestClient:
    return TestClient(create_app())


@pytest.fixture(scope="module")
def capped_client() -> TestClient:
    return TestClient(create_app(row_cap=100))


LEAN_BODY = {"configuration": {"suppliers": 1, "plants": 1, "lines_per_plant": 1}}


class TestHealthAndDefaults:
    def test_healthz(self, client):
        response = client.get("/healthz")
        assert response.status_code == 200
        assert response.json()["status"] == "ok"
        assert "version" in response.json()

    def test_defaults_carry_baseline_data(self, client):
        data = client.get("/api/v1/defaults").json()
        assert data["rates"]["supplier"]["mean_time_to_fail"] == 17.3
        assert data["economics"]["unit_price"] == 5.55
        assert data["economics"]["annual_demand"] == 90000.0
        assert 1.0 in data["disruption_multipliers"]
        assert data["price_scan"]["step"] == 0.25
        assert len(data["comparison_configurations"]) == 5


class TestEvaluate:
    def test_lean_baseline(self, client):
        response = client.post("/api/v1/evaluate", json=LEAN_BODY)
        assert response.status_code == 200
        payload = response.json()
        report = evaluate(Configuration(1, 1, 1), BASELINE_RATES)
        assert payload["report"]["s"] == report.shortage
        assert payload["report"]["mean_uptime"] == report.mean_uptime
        assert payload["presentation"]["shortage_pct"] == "10%"
        assert payload["presentation"]["mean_uptime_years"] == "4.7"
        assert payload["request"]["configuration"]["label"] == "1-1-1"

    def test_multiplier_row(self, client):
        body = {
            "configuration": {"suppliers": 1, "plants": 2, "lines_per_plant": 1},
            "multipliers": {"disruption": 0.5},
        }
        payload = client.post("/api/v1/evaluate", json=body).json()
        assert payload["presentation"]["mean_uptime_years"] == "31.5"

    def test_numeric_identity_with_library(self, client):
        body = {
            "configuration": {"suppliers": 2, "plants": 1, "lines_per_plant": 2},
            "multipliers": {"disruption": 1.5, "recovery": 0.5},
        }
        payload = client.post("/api/v1/evaluate", json=body).json()
        report = evaluate(
            Configuration(2, 1, 2), BASELINE_RATES, RateMultipliers(disruption=1.5, recovery=0.5)
        )
        assert payload["report"]["r"] == report.reliability
        assert payload["report"]["crit_line"] == report.line_criticality

    def test_zero_count_is_400_naming_field(self, client):
        body = {"configuration": {"suppliers": 1, "plants": 1, "lines_per_plant": 0}}
        response = client.post("/api/v1/evaluate", json=body)
        assert response.status_code == 400
        assert "lines_per_plant" in response.json()["detail"]

    def test_unknown_key_is_400(self, client):
        body = dict(LEAN_BODY, extra_knob=1)
        response = client.post("/api/v1/evaluate", json=body)
        assert response.status_code == 400
        assert "extra_knob" in response.json()["detail"]

    def test_missing_configuration_is_400(self, client):
        response = client.post("/api/v1/evaluate", json={})
        assert response.status_code == 400
        assert "configuration" in response.json()["detail"]

    def test_malformed_json_is_400(self, client):
        response = client.post(
            "/api/v1/evaluate", content=b"{", headers={"content-type": "application/json"}
        )
        assert response.status_code == 400


class TestSweep:
    def test_factorial_cube(self, client):
        body = {"factorial": {"min": 1, "max": 3}}
        response = client.post("/api/v1/sweep", json=body)
        assert response.status_code == 200
        rows = response.json()["rows"]
        assert len(rows) == 27
        lean = rows[0]
        assert lean["z_api"] == 1 and lean["z_p"] == 1 and lean["z_l"] == 1
        assert lean["s"] == evaluate(Configuration(1, 1, 1), BASELINE_RATES).shortage

    def test_row_cap_413(self, capped_client):
        body = {"factorial": {"min": 1, "max": 5}}  # 125 rows > cap of 100
        response = capped_client.post("/api/v1/sweep", json=body)
        assert response.status_code == 413
        # Within the cap the same request shape succeeds.
        ok = capped_client.post("/api/v1/sweep", json={"factorial": {"min": 1, "max": 3}})
        assert ok.status_code == 200

    def test_multiplier_sweep_rows(self, client):
        body = {
            "configurations": [{"suppliers": 2, "plants": 2, "lines_per_plant": 1}],
            "recovery_multipliers": [2.0],
        }
        rows = client.post("/api/v1/sweep", json=body).json()["rows"]
        assert len(rows) == 1
        assert rows[0]["rec_mult"] == 2.0
        expected = evaluate(
            Configuration(2, 2, 1), BASELINE_RATES, RateMultipliers(recovery=2.0)
        )
        assert rows[0]["mean_uptime"] == expected.mean_uptime

    def test_needs_exactly_one_selector(self, client):
        assert client.post("/api/v1/sweep", json={}).status_code == 400
        both = {
            "factorial": {"min": 1, "max": 1},
            "configurations": [{"suppliers": 1, "plants": 1, "lines_per_plant": 1}],
        }
        assert client.post("/api/v1/sweep", json=both).status_code == 400


class TestEconomics:
    def test_default_scan_switch_prices(self, client):
        payload = client.post("/api/v1/economics", json={"price_max": 50.0}).json()
        switch = payload["switch_prices"]
        assert switch[0]["best"] is None
        labels = [s["best"] for s in switch[1:]]
        assert labels == ["1-1-1", "2-1-1", "2-2-1"]
        thresholds = {(t["a"], t["b"]): t["price"] for t in payload["thresholds"]}
        assert thresholds[("1-1-1", "2-1-1")] == pytest.approx(9.06, abs=0.005)
        assert thresholds[("2-1-1", "2-2-1")] == pytest.approx(34.76, abs=0.005)

    def test_breakeven_prices(self, client):
        payload = client.post("/api/v1/economics", json={}).json()
        assert payload["breakeven_prices"]["1-1-1"] == pytest.approx(4.36, abs=0.005)
        assert payload["breakeven_prices"]["2-2-1"] == pytest.approx(5.71, abs=0.005)

    def test_bad_step_is_400(self, client):
        response = client.post("/api/v1/economics", json={"step": 0})
        assert response.status_code == 400
        assert "step" in response.json()["detail"]

    def test_inverted_range_is_422(self, client):
        response = client.post("/api/v1/economics", json={"price_min": 10.0, "price_max": 1.0})
        assert response.status_code == 422


class TestSimulate:
    BODY = {
        "configuration": {"suppliers": 1, "plants": 1, "lines_per_plant": 1},
        "simulation": {"horizon": 5000.0, "replications": 2, "seed": 42},
    }

    def test_deterministic_for_fixed_seed(self, client):
        a = client.post("/api/v1/simulate", json=self.BODY)
        b = client.post("/api/v1/simulate", json=self.BODY)
        assert a.status_code == 200
        assert a.json() == b.json()

    def test_matches_library_call(self, client):
        payload = client.post("/api/v1/simulate", json=self.BODY).json()
        result = simulate(
            Configuration(1, 1, 1),
            BASELINE_RATES,
            SimulationSpec(horizon=5000.0, replications=2, seed=42),
        )
        assert payload["empirical"]["availability"] == result.availability
        assert payload["empirical"]["mean_uptime"] == result.mean_uptime
        assert payload["closed_form"]["mean_uptime"] == mean_uptime(
            Configuration(1, 1, 1), BASELINE_RATES
        )

    def test_zero_replications_is_400(self, client):
        body = {
            "configuration": {"suppliers": 1, "plants": 1, "lines_per_plant": 1},
            "simulation": {"replications": 0},
        }
        response = client.post("/api/v1/simulate", json=body)
        assert response.status_code == 400
        assert "replications" in response.json()["detail"]

    def test_warmup_beyond_horizon_is_422(self, client):
        body = {
            "configuration": {"suppliers": 1, "plants": 1, "lines_per_plant": 1},
            "simulation": {"horizon": 10.0, "warmup": 20.0},
        }
        response = client.post("/api/v1/simulate", json=body)
        assert response.status_code == 422
