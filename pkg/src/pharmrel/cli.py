"""Command-line interface.

Subcommands: evaluate, sweep, economics, simulate, verify, serve.
Exit codes: 0 success, 2 validation error, 3 verification failure.
The PHARMREL_SEED environment variable overrides the default simulation seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Sequence
from dataclasses import replace

from .economics import BASELINE_ECONOMICS, breakeven_price, profit_scan, threshold_price
from .errors import (
    DegenerateComparisonError,
    InvalidParameterError,
    NoCrossingError,
    VerificationError,
)
from .presentation import (
    SWEEP_COLUMNS,
    format_full,
    format_percent,
    format_years,
    render_table,
    report_presentation,
    rows_to_csv,
    sweep_row_record,
)
from .reliability import (
    ComponentRates,
    Configuration,
    EchelonRates,
    RateMultipliers,
    ReliabilityReport,
    evaluate,
    mean_downtime,
    mean_uptime,
    system_reliability,
)
from .runconfig import RunConfig, load_run_config, run_config_from_dict
from .scenario import SweepRow, combined_strategies
from .simulation import DEFAULT_SEED, SimulationSpec, simulate
from .verify import verify_enumeration, verify_simulation

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_VERIFICATION = 3

DEFAULT_ECON_CONFIGS = "1-1-1,2-1-1,1-2-1,2-2-1"


def parse_config_label(label: str) -> Configuration:
    """Parse the 'suppliers-plants-lines' shorthand, e.g. '2-2-1'."""
    parts = label.split("-")
    if len(parts) != 3:
        raise InvalidParameterError(
            f"configuration {label!r} must look like 'suppliers-plants-lines', e.g. 2-2-1"
        )
    try:
        a, p, l = (int(x) for x in parts)
    except ValueError:
        raise InvalidParameterError(f"configuration {label!r} has non-integer counts") from None
    return Configuration(a, p, l)


def parse_config_list(text: str) -> list[Configuration]:
    return [parse_config_label(part) for part in text.split(",") if part]


def parse_range(text: str) -> tuple[int, int]:
    """Parse 'lo..hi' (or a bare integer as a single-point range)."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
    else:
        lo_text = hi_text = text
    try:
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise InvalidParameterError(f"range {text!r} must look like '1..3'") from None
    if lo < 1 or hi < lo:
        raise InvalidParameterError(f"range {text!r} must satisfy 1 <= lo <= hi")
    return lo, hi


def parse_float_list(text: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part]
    except ValueError:
        raise InvalidParameterError(f"{text!r} is not a comma-separated number list") from None
    if not values:
        raise InvalidParameterError("multiplier list is empty")
    return values


def default_seed() -> int:
    env = os.environ.get("PHARMREL_SEED")
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise InvalidParameterError(f"PHARMREL_SEED must be an integer, got {env!r}") from None


def _add_config_source_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="FILE", help="JSON run-configuration file")
    parser.add_argument("--suppliers", type=int, help="number of raw-material suppliers")
    parser.add_argument("--plants", type=int, help="number of manufacturing plants")
    parser.add_argument("--lines", type=int, help="number of lines per plant")


def _add_rate_args(parser: argparse.ArgumentParser) -> None:
    for echelon in ("supplier", "plant", "line"):
        parser.add_argument(f"--mtf-{echelon}", type=float, help=f"mean years to fail, {echelon}")
        parser.add_argument(f"--mtr-{echelon}", type=float, help=f"mean years to recover, {echelon}")
    parser.add_argument("--disruption-multiplier", type=float, help="multiplier on all failure rates")
    parser.add_argument("--recovery-multiplier", type=float, help="multiplier on all recovery rates")


def _load_context(args: argparse.Namespace) -> RunConfig:
    """Run config from --config merged with any overriding flags."""
    base = load_run_config(args.config) if args.config else run_config_from_dict({})

    configuration = base.configuration
    counts = (getattr(args, "suppliers", None), getattr(args, "plants", None), getattr(args, "lines", None))
    if any(v is not None for v in counts):
        if any(v is None for v in counts):
            raise InvalidParameterError("--suppliers, --plants, and --lines must be given together")
        configuration = Configuration(*counts)

    def component(name: str, current: ComponentRates) -> ComponentRates:
        mtf = getattr(args, f"mtf_{name}", None)
        mtr = getattr(args, f"mtr_{name}", None)
        if mtf is None and mtr is None:
            return current
        return ComponentRates(
            mean_time_to_fail=current.mean_time_to_fail if mtf is None else mtf,
            mean_time_to_recover=current.mean_time_to_recover if mtr is None else mtr,
        )

    rates = EchelonRates(
        supplier=component("supplier", base.rates.supplier),
        plant=component("plant", base.rates.plant),
        line=component("line", base.rates.line),
    )

    multipliers = base.multipliers
    dis = getattr(args, "disruption_multiplier", None)
    rec = getattr(args, "recovery_multiplier", None)
    if dis is not None or rec is not None:
        multipliers = RateMultipliers(
            disruption=multipliers.disruption if dis is None else dis,
            recovery=multipliers.recovery if rec is None else rec,
        )

    return replace(base, configuration=configuration, rates=rates, multipliers=multipliers)


def _report_payload(
    cfg: Configuration, multipliers: RateMultipliers, report: ReliabilityReport
) -> dict:
    return {
        "configuration": {
            "suppliers": cfg.suppliers,
            "plants": cfg.plants,
            "lines_per_plant": cfg.lines_per_plant,
        },
        "multipliers": {
            "disruption": multipliers.disruption,
            "recovery": multipliers.recovery,
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


def cmd_evaluate(args: argparse.Namespace) -> int:
    ctx = _load_context(args)
    if ctx.configuration is None:
        raise InvalidParameterError(
            "a configuration is required: pass --suppliers/--plants/--lines or a --config file"
        )
    cfg = ctx.configuration
    report = evaluate(cfg, ctx.rates, ctx.multipliers)

    if args.format == "structured":
        print(json.dumps(_report_payload(cfg, ctx.multipliers, report), indent=2))
    elif args.format == "csv":
        row = SweepRow(cfg, ctx.multipliers, report)
        print(rows_to_csv([row]), end="")
    else:
        pres = report_presentation(report)
        body = [
            ["configuration", cfg.label(), ""],
            ["reliability", format_full(report.reliability), ""],
            ["expected shortage", format_full(report.shortage),
             f"{pres['shortage_pct_fine']} ({pres['shortage_pct']})"],
            ["supplier stage", format_full(report.supplier_stage), format_percent(report.supplier_stage, 1)],
            ["production stage", format_full(report.production_stage), format_percent(report.production_stage, 1)],
            ["supplier criticality", format_full(report.supplier_criticality), ""],
            ["plant criticality", format_full(report.plant_criticality), ""],
            ["line criticality", format_full(report.line_criticality), ""],
            ["mean uptime (years)", format_full(report.mean_uptime), pres["mean_uptime_years"]],
            ["mean downtime (years)", format_full(report.mean_downtime), pres["mean_downtime_years"]],
        ]
        print(render_table(["quantity", "value", "rounded"], body), end="")
    return EXIT_OK


def _sweep_rows(args: argparse.Namespace, ctx: RunConfig) -> list[SweepRow]:
    if args.factorial:
        lo, hi = parse_range(args.factorial)
        configs = [
            Configuration(a, p, l)
            for a in range(lo, hi + 1)
            for p in range(lo, hi + 1)
            for l in range(lo, hi + 1)
        ]
    elif args.configs:
        configs = parse_config_list(args.configs)
    else:
        raise InvalidParameterError("pass --factorial LO..HI or --configs LIST")

    dis = parse_float_list(args.disruption_multipliers) if args.disruption_multipliers else [1.0]
    rec = parse_float_list(args.recovery_multipliers) if args.recovery_multipliers else [1.0]
    pairs = [(d, r) for d in dis for r in rec]
    return combined_strategies(configs, pairs, ctx.rates)


def cmd_sweep(args: argparse.Namespace) -> int:
    ctx = _load_context(args)
    rows = _sweep_rows(args, ctx)
    if args.format == "table":
        body = []
        for row in rows:
            record = sweep_row_record(row)
            body.append(
                [
                    row.configuration.label(),
                    f"{record['dis_mult']:g}",
                    f"{record['rec_mult']:g}",
                    format_percent(record["s"], 1),
                    format_years(record["mean_uptime"]),
                    format_years(record["mean_downtime"]),
                ]
            )
        print(
            render_table(
                ["config", "dis_mult", "rec_mult", "shortage", "uptime_y", "downtime_y"], body
            ),
            end="",
        )
    else:
        print(rows_to_csv(rows), end="")
    return EXIT_OK


def cmd_economics(args: argparse.Namespace) -> int:
    ctx = _load_context(args)
    configs = parse_config_list(args.configs)
    rates, econ = ctx.rates.scaled(ctx.multipliers), ctx.economics

    if args.threshold:
        cfg_a, cfg_b = (parse_config_label(x) for x in args.threshold)
        value = threshold_price(cfg_a, cfg_b, rates, econ)
        if args.format == "structured":
            print(json.dumps({"threshold_price": value, "a": cfg_a.label(), "b": cfg_b.label()}))
        else:
            print(f"threshold {cfg_a.label()} vs {cfg_b.label()}: {value:.2f}")
        return EXIT_OK

    if args.breakeven:
        payload = {cfg.label(): breakeven_price(cfg, rates, econ) for cfg in configs}
        if args.format == "structured":
            print(json.dumps({"breakeven_prices": payload}))
        else:
            for label, value in payload.items():
                print(f"breakeven {label}: {value:.2f}")
        return EXIT_OK

    curve = profit_scan(configs, rates, econ, args.price_min, args.price_max, args.step)
    if args.format == "csv":
        header = ["price"] + [cfg.label() for cfg in curve.configurations] + ["best"]
        lines = [",".join(header)]
        for i, price in enumerate(curve.prices):
            winner = curve.best[i]
            cells = [format_full(price)]
            cells += [format_full(curve.profits[c][i]) for c in range(len(curve.configurations))]
            cells.append(winner.label() if winner else "none")
            lines.append(",".join(cells))
        print("\n".join(lines))
    elif args.format == "structured":
        print(
            json.dumps(
                {
                    "prices": list(curve.prices),
                    "profits": {
                        cfg.label(): list(curve.profits[i])
                        for i, cfg in enumerate(curve.configurations)
                    },
                    "best": [cfg.label() if cfg else None for cfg in curve.best],
                    "breakeven_prices": {
                        cfg.label(): value
                        for cfg, value in zip(curve.configurations, curve.breakeven_prices)
                    },
                    "thresholds": [
                        {"a": a.label(), "b": b.label(), "price": value}
                        for a, b, value in curve.thresholds
                    ],
                    "switch_prices": [
                        {"price": price, "best": cfg.label() if cfg else None}
                        for price, cfg in curve.switch_prices()
                    ],
                }
            )
        )
    else:
        for cfg, value in zip(curve.configurations, curve.breakeven_prices):
            print(f"breakeven {cfg.label()}: {value:.2f}")
        for a, b, value in curve.thresholds:
            print(f"threshold {a.label()} vs {b.label()}: {value:.2f}")
        for price, winner in curve.switch_prices():
            print(f"best from {price:.2f}: {winner.label() if winner else 'do not produce'}")
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    ctx = _load_context(args)
    if ctx.configuration is None:
        raise InvalidParameterError(
            "a configuration is required: pass --suppliers/--plants/--lines or a --config file"
        )
    cfg = ctx.configuration
    rates = ctx.rates.scaled(ctx.multipliers)

    base = ctx.simulation or SimulationSpec(horizon=1e6, replications=5, seed=default_seed())
    spec = SimulationSpec(
        horizon=args.horizon if args.horizon is not None else base.horizon,
        replications=args.replications if args.replications is not None else base.replications,
        seed=args.seed if args.seed is not None else base.seed,
        warmup=args.warmup if args.warmup is not None else base.warmup,
    )
    result = simulate(cfg, rates, spec, workers=args.workers)
    closed = {
        "r": system_reliability(cfg, rates),
        "mean_uptime": mean_uptime(cfg, rates),
        "mean_downtime": mean_downtime(cfg, rates),
    }
    if args.format == "structured":
        print(
            json.dumps(
                {
                    "configuration": cfg.label(),
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
                    "closed_form": closed,
                }
            )
        )
    else:
        body = [
            ["availability", f"{result.availability:.6f}", f"{result.availability_se:.2g}", f"{closed['r']:.6f}"],
            ["mean uptime", f"{result.mean_uptime:.4f}", f"{result.mean_uptime_se:.2g}", f"{closed['mean_uptime']:.4f}"],
            ["mean downtime", f"{result.mean_downtime:.4f}", f"{result.mean_downtime_se:.2g}", f"{closed['mean_downtime']:.4f}"],
        ]
        print(render_table(["metric", "simulated", "se", "closed form"], body), end="")
        print(f"shortage episodes: {result.shortage_episode_count}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    run_enum = args.enumerate or not args.simulate
    run_sim = args.simulate or not args.enumerate
    seed = args.seed if args.seed is not None else default_seed()

    checks = []
    if run_enum:
        checks += verify_enumeration(
            max_components=args.max_components, rate_sets=args.rate_sets, seed=seed
        )
    if run_sim:
        checks += verify_simulation(
            horizon=args.horizon, replications=args.replications, seed=seed, workers=args.workers
        )

    failed = [c for c in checks if not c.passed]
    for check in checks:
        print(f"{'PASS' if check.passed else 'FAIL'}  {check.name}: {check.detail}")
    if failed:
        raise VerificationError(f"{len(failed)} of {len(checks)} checks failed")
    print(f"all {len(checks)} checks passed")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app, find_dashboard_dir

    dashboard = args.dashboard_dir or find_dashboard_dir()
    app = create_app(row_cap=args.row_cap, workers=args.workers, dashboard_dir=dashboard)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pharmrel",
        description="Reliability and profitability analysis for three-echelon drug supply chains",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("evaluate", help="evaluate one configuration")
    _add_config_source_args(p_eval)
    _add_rate_args(p_eval)
    p_eval.add_argument("--format", choices=("table", "csv", "structured"), default="table")
    p_eval.set_defaults(handler=cmd_evaluate)

    p_sweep = sub.add_parser("sweep", help="factorial and multiplier sweeps")
    _add_config_source_args(p_sweep)
    _add_rate_args(p_sweep)
    p_sweep.add_argument("--factorial", metavar="LO..HI", help="component-count range per echelon")
    p_sweep.add_argument("--configs", metavar="LIST", help="comma-separated A-P-L labels")
    p_sweep.add_argument("--disruption-multipliers", metavar="LIST", help="comma-separated multipliers")
    p_sweep.add_argument("--recovery-multipliers", metavar="LIST", help="comma-separated multipliers")
    p_sweep.add_argument("--format", choices=("csv", "table"), default="csv")
    p_sweep.set_defaults(handler=cmd_sweep)

    p_econ = sub.add_parser("economics", help="profit, breakeven, and threshold prices")
    _add_config_source_args(p_econ)
    _add_rate_args(p_econ)
    p_econ.add_argument("--configs", metavar="LIST", default=DEFAULT_ECON_CONFIGS)
    p_econ.add_argument("--breakeven", action="store_true", help="print per-configuration breakeven prices")
    p_econ.add_argument("--threshold", nargs=2, metavar=("A", "B"), help="price equalizing two configurations")
    p_econ.add_argument("--price-min", type=float, default=0.0)
    p_econ.add_argument("--price-max", type=float, default=50.0)
    p_econ.add_argument("--step", type=float, default=0.25)
    p_econ.add_argument("--format", choices=("table", "csv", "structured"), default="table")
    p_econ.set_defaults(handler=cmd_economics)

    p_sim = sub.add_parser("simulate", help="validate one configuration by simulation")
    _add_config_source_args(p_sim)
    _add_rate_args(p_sim)
    p_sim.add_argument("--horizon", type=float, help="years per replication (default 1e6)")
    p_sim.add_argument("--replications", type=int)
    p_sim.add_argument("--seed", type=int)
    p_sim.add_argument("--warmup", type=float)
    p_sim.add_argument("--workers", type=int, default=1)
    p_sim.add_argument("--format", choices=("table", "structured"), default="table")
    p_sim.set_defaults(handler=cmd_simulate)

    p_verify = sub.add_parser("verify", help="cross-check closed forms against the oracles")
    p_verify.add_argument("--enumerate", action="store_true", help="run the enumeration battery")
    p_verify.add_argument("--simulate", action="store_true", help="run the simulation battery")
    p_verify.add_argument("--max-components", type=int, default=12)
    p_verify.add_argument("--rate-sets", type=int, default=100)
    p_verify.add_argument("--horizon", type=float, default=1e6)
    p_verify.add_argument("--replications", type=int, default=5)
    p_verify.add_argument("--seed", type=int)
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.set_defaults(handler=cmd_verify)

    p_serve = sub.add_parser("serve", help="run the HTTP service (and dashboard, if built)")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--row-cap", type=int, default=10_000)
    p_serve.add_argument("--workers", type=int, default=1, help="simulation worker threads")
    p_serve.add_argument("--dashboard-dir", help="directory of built dashboard assets")
    p_serve.set_defaults(handler=cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (InvalidParameterError, NoCrossingError, DegenerateComparisonError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION


if __name__ == "__main__":
    sys.exit(main())
