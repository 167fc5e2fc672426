"""Loading and validation of JSON run-configuration documents.

A run config can carry the configuration, per-echelon rates, rate
multipliers, economics parameters, and simulation settings.  Every section is
optional except where a caller requires it; omitted sections fall back to the
bundled baseline data.  Unknown keys are rejected, with errors naming the
offending field by JSON path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any

import jsonschema

from .economics import BASELINE_ECONOMICS, EconomicsParams
from .errors import InvalidParameterError
from .reliability import (
    BASELINE_RATES,
    ComponentRates,
    Configuration,
    EchelonRates,
    RateMultipliers,
)
from .simulation import DEFAULT_SEED, SimulationSpec

__all__ = [
    "RunConfig",
    "load_schema",
    "validate_document",
    "run_config_from_dict",
    "load_run_config",
    "rates_from_dict",
    "economics_from_dict",
]


def load_schema() -> dict[str, Any]:
    text = resources.files("pharmrel.schemas").joinpath("run_config.schema.json").read_text()
    return json.loads(text)


_SCHEMA = load_schema()


def validate_document(document: Any, schema: dict[str, Any] | None = None) -> None:
    """Validate a parsed JSON document, raising InvalidParameterError with the field path."""
    validator = jsonschema.Draft202012Validator(schema or _SCHEMA)
    errors = sorted(validator.iter_errors(document), key=lambda e: e.json_path)
    if errors:
        first = errors[0]
        raise InvalidParameterError(f"{first.json_path}: {first.message}")


def rates_from_dict(data: dict[str, Any], base: EchelonRates = BASELINE_RATES) -> EchelonRates:
    """Per-echelon rates with omitted echelons taken from the baseline."""

    def pick(name: str, fallback: ComponentRates) -> ComponentRates:
        if name not in data:
            return fallback
        entry = data[name]
        return ComponentRates(
            mean_time_to_fail=entry["mean_time_to_fail"],
            mean_time_to_recover=entry["mean_time_to_recover"],
        )

    return EchelonRates(
        supplier=pick("supplier", base.supplier),
        plant=pick("plant", base.plant),
        line=pick("line", base.line),
    )


def economics_from_dict(
    data: dict[str, Any], base: EconomicsParams = BASELINE_ECONOMICS
) -> EconomicsParams:
    merged = {
        "supplier_fixed_cost": base.supplier_fixed_cost,
        "supplier_fee": base.supplier_fee,
        "plant_fixed_cost": base.plant_fixed_cost,
        "plant_fee": base.plant_fee,
        "line_fixed_cost": base.line_fixed_cost,
        "program_fee": base.program_fee,
        "raw_material_cost": base.raw_material_cost,
        "production_cost": base.production_cost,
        "unit_price": base.unit_price,
        "annual_demand": base.annual_demand,
    }
    merged.update(data)
    return EconomicsParams(**merged)


@dataclass(frozen=True)
class RunConfig:
    """A validated run-configuration document with defaults filled in."""

    configuration: Configuration | None
    rates: EchelonRates
    multipliers: RateMultipliers
    economics: EconomicsParams
    simulation: SimulationSpec | None


def run_config_from_dict(document: dict[str, Any]) -> RunConfig:
    validate_document(document)

    configuration = None
    if "configuration" in document:
        c = document["configuration"]
        configuration = Configuration(
            suppliers=c["suppliers"],
            plants=c["plants"],
            lines_per_plant=c["lines_per_plant"],
        )

    rates = rates_from_dict(document.get("rates", {}))

    m = document.get("multipliers", {})
    multipliers = RateMultipliers(
        disruption=m.get("disruption", 1.0),
        recovery=m.get("recovery", 1.0),
    )

    economics = economics_from_dict(document.get("economics", {}))

    simulation = None
    if "simulation" in document:
        s = document["simulation"]
        simulation = SimulationSpec(
            horizon=s.get("horizon", 1e6),
            replications=s.get("replications", 5),
            seed=s.get("seed", DEFAULT_SEED),
            warmup=s.get("warmup", 0.0),
        )

    return RunConfig(
        configuration=configuration,
        rates=rates,
        multipliers=multipliers,
        economics=economics,
        simulation=simulation,
    )


def load_run_config(path: str | Path) -> RunConfig:
    try:
        document = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidParameterError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(document, dict):
        raise InvalidParameterError(f"{path}: top level must be a JSON object")
    return run_config_from_dict(document)
