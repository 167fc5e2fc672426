"""Continuous-time simulation of the supply chain as alternating renewal processes.

Every component independently alternates exponential up-times (mean mtf) and
down-times (mean mtr), starting up at t = 0.  Each replication merges the
component transition streams into one ordered event timeline, tracks the
system state through the structure predicate, and reports

  * time-averaged system availability over [warmup, horizon],
  * mean durations of complete system up/down episodes (episodes cut off by
    the horizon are excluded from the means but still count toward the time
    average),
  * episode counts.

Estimates are averaged across replications; standard errors are the sample
standard deviation across replications divided by sqrt(replications).

Reproducibility: every (seed, replication, component) triple seeds an
independent PCG64 stream via numpy's SeedSequence, so results are identical
across runs and platforms for a fixed seed, replications may be computed in
any order (or in parallel), and adding components does not perturb the
streams of existing ones.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError
from .reliability import Configuration, EchelonRates, _require_positive_finite

__all__ = [
    "DEFAULT_SEED",
    "SimulationSpec",
    "ReplicationStats",
    "SimulationResult",
    "simulate",
]

DEFAULT_SEED = 42


@dataclass(frozen=True)
class SimulationSpec:
    """Length, replication count, seed, and warmup for one simulation run."""

    horizon: float
    replications: int = 5
    seed: int = DEFAULT_SEED
    warmup: float = 0.0

    def __post_init__(self) -> None:
        _require_positive_finite("horizon", self.horizon)
        if not isinstance(self.replications, int) or self.replications < 1:
            raise InvalidParameterError(
                f"replications must be an integer >= 1, got {self.replications!r}"
            )
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise InvalidParameterError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if not 0.0 <= self.warmup < self.horizon:
            raise InvalidParameterError(
                f"warmup must satisfy 0 <= warmup < horizon, got {self.warmup!r}"
            )


@dataclass(frozen=True)
class ReplicationStats:
    availability: float
    mean_uptime: float
    mean_downtime: float
    up_episodes: int
    down_episodes: int


@dataclass(frozen=True)
class SimulationResult:
    availability: float
    availability_se: float
    mean_uptime: float
    mean_uptime_se: float
    mean_downtime: float
    mean_downtime_se: float
    shortage_episode_count: int
    replications: tuple[ReplicationStats, ...]


def _component_transition_times(
    rng: np.random.Generator, mtf: float, mtr: float, horizon: float
) -> np.ndarray:
    """Transition instants of one component in (0, horizon]; even positions are failures."""
    n = max(16, int(horizon / (mtf + mtr) * 1.1) + 64)
    while True:
        durations = np.empty(2 * n)
        durations[0::2] = rng.exponential(mtf, n)
        durations[1::2] = rng.exponential(mtr, n)
        times = np.cumsum(durations)
        if times[-1] > horizon:
            break
        n *= 2
    cut = int(np.searchsorted(times, horizon, side="right"))
    return times[:cut]


def _run_replication(
    cfg: Configuration, rates: EchelonRates, spec: SimulationSpec, rep: int
) -> ReplicationStats:
    per_component = (
        [rates.supplier] * cfg.suppliers
        + [rates.plant] * cfg.plants
        + [rates.line] * cfg.total_lines
    )
    times_parts: list[np.ndarray] = []
    delta_parts: list[np.ndarray] = []
    comp_parts: list[np.ndarray] = []
    for ci, comp in enumerate(per_component):
        rng = np.random.default_rng(np.random.SeedSequence([spec.seed, rep, ci]))
        t = _component_transition_times(
            rng, comp.mean_time_to_fail, comp.mean_time_to_recover, spec.horizon
        )
        delta = np.empty(t.size, dtype=np.int64)
        delta[0::2] = -1
        delta[1::2] = 1
        times_parts.append(t)
        delta_parts.append(delta)
        comp_parts.append(np.full(t.size, ci, dtype=np.int64))

    times = np.concatenate(times_parts)
    deltas = np.concatenate(delta_parts)
    comps = np.concatenate(comp_parts)
    order = np.argsort(times, kind="stable")
    times, deltas, comps = times[order], deltas[order], comps[order]

    suppliers_up = cfg.suppliers + np.cumsum(deltas * (comps < cfg.suppliers))
    lines_start = cfg.suppliers + cfg.plants
    production_ok = np.zeros(times.size, dtype=bool)
    for j in range(cfg.plants):
        plant_up = 1 + np.cumsum(deltas * (comps == cfg.suppliers + j))
        lo = lines_start + j * cfg.lines_per_plant
        hi = lo + cfg.lines_per_plant
        lines_up = cfg.lines_per_plant + np.cumsum(deltas * ((comps >= lo) & (comps < hi)))
        production_ok |= (plant_up == 1) & (lines_up >= 1)
    system_up = (suppliers_up >= 1) & production_ok

    # Segment i spans [bounds[i], bounds[i+1]) with constant state states[i];
    # the initial all-up segment is prepended.
    states = np.concatenate([[True], system_up])
    bounds = np.concatenate([[0.0], times, [spec.horizon]])
    clipped = np.clip(bounds, spec.warmup, spec.horizon)
    durations = np.diff(clipped)
    window = spec.horizon - spec.warmup
    availability = float(durations[states].sum()) / window

    change = np.nonzero(states[1:] != states[:-1])[0] + 1
    starts = np.concatenate([[0], change])
    ends = np.concatenate([change, [states.size]])
    episode_state = states[starts]
    episode_duration = bounds[np.minimum(ends, bounds.size - 1)] - bounds[starts]
    # The final episode is truncated by the horizon; episodes beginning before
    # the warmup boundary are also excluded from the duration means.
    complete = (ends < states.size) & (bounds[starts] >= spec.warmup)
    up_durations = episode_duration[episode_state & complete]
    down_durations = episode_duration[~episode_state & complete]

    return ReplicationStats(
        availability=availability,
        mean_uptime=float(up_durations.mean()) if up_durations.size else float("nan"),
        mean_downtime=float(down_durations.mean()) if down_durations.size else float("nan"),
        up_episodes=int(up_durations.size),
        down_episodes=int(down_durations.size),
    )


def _mean_and_se(values: np.ndarray) -> tuple[float, float]:
    values = values[~np.isnan(values)]
    if values.size == 0:
        return float("nan"), float("nan")
    mean = float(values.mean())
    if values.size == 1:
        return mean, 0.0
    return mean, float(values.std(ddof=1) / np.sqrt(values.size))


def simulate(
    cfg: Configuration,
    rates: EchelonRates,
    spec: SimulationSpec,
    workers: int = 1,
) -> SimulationResult:
    """Simulate the supply chain; deterministic for a fixed spec regardless of workers."""
    longest_mean = max(
        rates.supplier.mean_time_to_fail,
        rates.supplier.mean_time_to_recover,
        rates.plant.mean_time_to_fail,
        rates.plant.mean_time_to_recover,
        rates.line.mean_time_to_fail,
        rates.line.mean_time_to_recover,
    )
    if spec.horizon < 100.0 * longest_mean:
        warnings.warn(
            f"horizon {spec.horizon} is less than 100x the longest mean time "
            f"({longest_mean}); estimates may be noisy",
            stacklevel=2,
        )

    reps = range(spec.replications)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            stats = list(pool.map(lambda r: _run_replication(cfg, rates, spec, r), reps))
    else:
        stats = [_run_replication(cfg, rates, spec, r) for r in reps]

    availability, availability_se = _mean_and_se(np.array([s.availability for s in stats]))
    up, up_se = _mean_and_se(np.array([s.mean_uptime for s in stats]))
    down, down_se = _mean_and_se(np.array([s.mean_downtime for s in stats]))
    return SimulationResult(
        availability=availability,
        availability_se=availability_se,
        mean_uptime=up,
        mean_uptime_se=up_se,
        mean_downtime=down,
        mean_downtime_se=down_se,
        shortage_episode_count=sum(s.down_episodes for s in stats),
        replications=tuple(stats),
    )
