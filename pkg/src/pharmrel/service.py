"""Stateless HTTP facade over the engine.

Routes (all JSON):

    GET  /healthz              liveness + version
    GET  /api/v1/defaults      bundled baseline data so clients never hardcode it
    POST /api/v1/evaluate      one configuration -> full report + display strings
    POST /api/v1/sweep         factorial / multiplier sweeps -> CSV-schema rows
    POST /api/v1/economics     profit curve, breakeven, thresholds, switch prices
    POST /api/v1/simulate      stochastic validation run (seeded, reproducible)

Error model: 400 when the body does not match the request schema (message
names the offending field), 422 when a value passes the schema but is outside
the engine's domain, 413 when a sweep would exceed the configured row cap.
Handlers hold no state; identical requests give identical responses.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles

from . import __version__
from .economics import BASELINE_ECONOMICS, EconomicsParams, profit_scan
from .errors import InvalidParameterError
from .presentation import report_presentation, sweep_row_record
from .reliability import (
    BASELINE_RATES,
    Configuration,
    EchelonRates,
    RateMultipliers,
    evaluate,
    mean_downtime,
    mean_uptime,
    system_reliability,
)
from .runconfig import economics_from_dict, load_schema, rates_from_dict, validate_document
from .scenario import (
    DEFAULT_COMPARISON_CONFIGURATIONS,
    DEFAULT_DISRUPTION_MULTIPLIERS,
    DEFAULT_RECOVERY_MULTIPLIERS,
    combined_strategies,
)
from .simulation import DEFAULT_SEED, SimulationSpec, simulate

__all__ = ["create_app", "find_dashboard_dir"]

_DEFS = load_schema()["$defs"]


def _schema(properties: dict[str, Any], required: list[str] | None = None) -> dict[str, Any]:
    return {
        "type": "object",
        "additionalProperties": False,
        "required": required or [],
        "properties": properties,
        "$defs": _DEFS,
    }


_MULTIPLIER_LIST = {"type": "array", "minItems": 1, "items": {"type": "number", "exclusiveMinimum": 0}}
_CONFIG_LIST = {"type": "array", "items": {"$ref": "#/$defs/configuration"}}

EVALUATE_SCHEMA = _schema(
    {
        "configuration": {"$ref": "#/$defs/configuration"},
        "rates": {"$ref": "#/$defs/rates"},
        "multipliers": {"$ref": "#/$defs/multipliers"},
    },
    required=["configuration"],
)

SWEEP_SCHEMA = _schema(
    {
        "factorial": {
            "type": "object",
            "additionalProperties": False,
            "required": ["min", "max"],
            "properties": {
                "min": {"type": "integer", "minimum": 1},
                "max": {"type": "integer", "minimum": 1},
            },
        },
        "configurations": _CONFIG_LIST,
        "disruption_multipliers": _MULTIPLIER_LIST,
        "recovery_multipliers": _MULTIPLIER_LIST,
        "rates": {"$ref": "#/$defs/rates"},
    }
)

ECONOMICS_SCHEMA = _schema(
    {
        "configurations": _CONFIG_LIST,
        "rates": {"$ref": "#/$defs/rates"},
        "multipliers": {"$ref": "#/$defs/multipliers"},
        "economics": {"$ref": "#/$defs/economics"},
        "price_min": {"type": "number", "minimum": 0},
        "price_max": {"type": "number", "minimum": 0},
        "step": {"type": "number", "exclusiveMinimum": 0},
    }
)

SIMULATE_SCHEMA = _schema(
    {
        "configuration": {"$ref": "#/$defs/configuration"},
        "rates": {"$ref": "#/$defs/rates"},
        "multipliers": {"$ref": "#/$defs/multipliers"},
        "simulation": {"$ref": "#/$defs/simulation"},
    },
    required=["configuration"],
)


async def _json_body(request: Request) -> dict[str, Any]:
    try:
        body = await request.json()
    except json.JSONDecodeError:
        raise HTTPException(status_code=400, detail="request body is not valid JSON") from None
    if not isinstance(body, dict):
        raise HTTPException(status_code=400, detail="request body must be a JSON object")
    return body


def _validate(body: dict[str, Any], schema: dict[str, Any]) -> None:
    try:
        validate_document(body, schema)
    except InvalidParameterError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None


def _configuration(data: dict[str, Any]) -> Configuration:
    return Configuration(
        suppliers=data["suppliers"],
        plants=data["plants"],
        lines_per_plant=data["lines_per_plant"],
    )


def _multipliers(data: dict[str, Any]) -> RateMultipliers:
    return RateMultipliers(
        disruption=data.get("disruption", 1.0),
        recovery=data.get("recovery", 1.0),
    )


def _rates_payload(rates: EchelonRates) -> dict[str, Any]:
    return {
        echelon: {
            "mean_time_to_fail": comp.mean_time_to_fail,
            "mean_time_to_recover": comp.mean_time_to_recover,
        }
        for echelon, comp in (
            ("supplier", rates.supplier),
            ("plant", rates.plant),
            ("line", rates.line),
        )
    }


def _config_payload(cfg: Configuration) -> dict[str, Any]:
    return {
        "suppliers": cfg.suppliers,
        "plants": cfg.plants,
        "lines_per_plant": cfg.lines_per_plant,
        "label": cfg.label(),
    }


def find_dashboard_dir() -> str | None:
    """Locate built dashboard assets next to the working tree, if any."""
    candidates = [
        Path.cwd() / "frontend" / "dist",
        Path(__file__).resolve().parents[2] / "frontend" / "dist",
    ]
    for candidate in candidates:
        if (candidate / "index.html").is_file():
            return str(candidate)
    return None


def create_app(
    row_cap: int = 10_000,
    workers: int = 1,
    dashboard_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="pharmrel", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(InvalidParameterError)
    async def _domain_error(request: Request, exc: InvalidParameterError):
        from fastapi.responses import JSONResponse

        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/healthz")
    async def healthz():
        return {"status": "ok", "version": __version__}

    @app.get("/api/v1/defaults")
    async def defaults():
        return {
            "rates": _rates_payload(BASELINE_RATES),
            "economics": {
                "supplier_fixed_cost": BASELINE_ECONOMICS.supplier_fixed_cost,
                "supplier_fee": BASELINE_ECONOMICS.supplier_fee,
                "plant_fixed_cost": BASELINE_ECONOMICS.plant_fixed_cost,
                "plant_fee": BASELINE_ECONOMICS.plant_fee,
                "line_fixed_cost": BASELINE_ECONOMICS.line_fixed_cost,
                "program_fee": BASELINE_ECONOMICS.program_fee,
                "raw_material_cost": BASELINE_ECONOMICS.raw_material_cost,
                "production_cost": BASELINE_ECONOMICS.production_cost,
                "unit_price": BASELINE_ECONOMICS.unit_price,
                "annual_demand": BASELINE_ECONOMICS.annual_demand,
            },
            "disruption_multipliers": list(DEFAULT_DISRUPTION_MULTIPLIERS),
            "recovery_multipliers": list(DEFAULT_RECOVERY_MULTIPLIERS),
            "comparison_configurations": [
                _config_payload(cfg) for cfg in DEFAULT_COMPARISON_CONFIGURATIONS
            ],
            "economics_configurations": [
                _config_payload(Configuration(*c)) for c in ((1, 1, 1), (2, 1, 1), (1, 2, 1), (2, 2, 1))
            ],
            "price_scan": {"price_min": 0.0, "price_max": 50.0, "step": 0.25},
            "simulation": {"horizon": 1e6, "replications": 5, "seed": DEFAULT_SEED, "warmup": 0.0},
            "row_cap": row_cap,
        }

    @app.post("/api/v1/evaluate")
    async def evaluate_endpoint(request: Request):
        body = await _json_body(request)
        _validate(body, EVALUATE_SCHEMA)
        cfg = _configuration(body["configuration"])
        rates = rates_from_dict(body.get("rates", {}))
        multipliers = _multipliers(body.get("multipliers", {}))
        report = evaluate(cfg, rates, multipliers)
        return {
            "request": {
                "configuration": _config_payload(cfg),
                "rates": _rates_payload(rates),
                "multipliers": {
                    "disruption": multipliers.disruption,
                    "recovery": multipliers.recovery,
                },
            },
            "report": {
                "r": report.reliability,
                "s": report.shortage,
                "r_api": report.supplier_stage,
                "r_pl": report.production_stage,
                "crit_api": report.supplier_criticality,
                "crit_plant": report.plant_criticality,
                "crit_line": report.line_criticality,
                "mean_uptime": report.mean_uptime,
                "mean_downtime": report.mean_downtime,
            },
            "presentation": report_presentation(report),
        }

    @app.post("/api/v1/sweep")
    async def sweep_endpoint(request: Request):
        body = await _json_body(request)
        _validate(body, SWEEP_SCHEMA)
        if ("factorial" in body) == ("configurations" in body):
            raise HTTPException(
                status_code=400,
                detail="pass exactly one of 'factorial' or 'configurations'",
            )
        if "factorial" in body:
            lo, hi = body["factorial"]["min"], body["factorial"]["max"]
            if hi < lo:
                raise HTTPException(status_code=400, detail="factorial.max must be >= factorial.min")
            configs = [
                Configuration(a, p, l)
                for a in range(lo, hi + 1)
                for p in range(lo, hi + 1)
                for l in range(lo, hi + 1)
            ]
        else:
            configs = [_configuration(c) for c in body["configurations"]]
        dis = body.get("disruption_multipliers", [1.0])
        rec = body.get("recovery_multipliers", [1.0])
        row_count = len(configs) * len(dis) * len(rec)
        if row_count > row_cap:
            raise HTTPException(
                status_code=413,
                detail=f"sweep would produce {row_count} rows, cap is {row_cap}",
            )
        rates = rates_from_dict(body.get("rates", {}))
        rows = combined_strategies(configs, [(d, r) for d in dis for r in rec], rates)
        return {"rows": [sweep_row_record(row) for row in rows]}

    @app.post("/api/v1/economics")
    async def economics_endpoint(request: Request):
        body = await _json_body(request)
        _validate(body, ECONOMICS_SCHEMA)
        if "configurations" in body:
            configs = [_configuration(c) for c in body["configurations"]]
        else:
            configs = [Configuration(*c) for c in ((1, 1, 1), (2, 1, 1), (1, 2, 1), (2, 2, 1))]
        rates = rates_from_dict(body.get("rates", {})).scaled(_multipliers(body.get("multipliers", {})))
        econ: EconomicsParams = economics_from_dict(body.get("economics", {}))
        curve = profit_scan(
            configs,
            rates,
            econ,
            price_min=body.get("price_min", 0.0),
            price_max=body.get("price_max", 50.0),
            step=body.get("step", 0.25),
        )
        if len(curve.prices) > row_cap:
            raise HTTPException(
                status_code=413,
                detail=f"scan would produce {len(curve.prices)} price points, cap is {row_cap}",
            )
        return {
            "configurations": [_config_payload(cfg) for cfg in curve.configurations],
            "prices": list(curve.prices),
            "profits": {
                cfg.label(): list(curve.profits[i]) for i, cfg in enumerate(curve.configurations)
            },
            "best": [cfg.label() if cfg else None for cfg in curve.best],
            "breakeven_prices": {
                cfg.label(): value for cfg, value in zip(curve.configurations, curve.breakeven_prices)
            },
            "thresholds": [
                {"a": a.label(), "b": b.label(), "price": value} for a, b, value in curve.thresholds
            ],
            "switch_prices": [
                {"price": price, "best": cfg.label() if cfg else None}
                for price, cfg in curve.switch_prices()
            ],
        }

    @app.post("/api/v1/simulate")
    async def simulate_endpoint(request: Request):
        body = await _json_body(request)
        _validate(body, SIMULATE_SCHEMA)
        cfg = _configuration(body["configuration"])
        rates = rates_from_dict(body.get("rates", {})).scaled(_multipliers(body.get("multipliers", {})))
        sim = body.get("simulation", {})
        spec = SimulationSpec(
            horizon=sim.get("horizon", 1e6),
            replications=sim.get("replications", 5),
            seed=sim.get("seed", DEFAULT_SEED),
            warmup=sim.get("warmup", 0.0),
        )
        result = simulate(cfg, rates, spec, workers=workers)
        return {
            "configuration": _config_payload(cfg),
            "spec": {
                "horizon": spec.horizon,
                "replications": spec.replications,
                "seed": spec.seed,
                "warmup": spec.warmup,
            },
            "empirical": {
                "availability": result.availability,
                "availability_se": result.availability_se,
                "mean_uptime": result.mean_uptime,
                "mean_uptime_se": result.mean_uptime_se,
                "mean_downtime": result.mean_downtime,
                "mean_downtime_se": result.mean_downtime_se,
                "shortage_episodes": result.shortage_episode_count,
            },
            "closed_form": {
                "r": system_reliability(cfg, rates),
                "mean_uptime": mean_uptime(cfg, rates),
                "mean_downtime": mean_downtime(cfg, rates),
            },
        }

    if dashboard_dir is not None:
        app.mount("/", StaticFiles(directory=dashboard_dir, html=True), name="dashboard")

    return app
