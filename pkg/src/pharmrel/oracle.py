"""Exact stationary-state enumeration, independent of the closed forms.

Components are indexed in a fixed canonical order:

    suppliers                    0 .. suppliers-1
    plants                       suppliers .. suppliers+plants-1
    lines (grouped by plant)     suppliers+plants .. end

The system is up when at least one supplier is up and some plant is up
together with at least one of its own lines.  Summing the stationary
probability of every component-state vector that satisfies that predicate
gives the system reliability with no series-parallel algebra involved, which
makes it a brute-force cross-check for the closed forms.

Enumeration is exponential in the component count and is capped at
MAX_ENUMERATION_COMPONENTS (2^24 states, evaluated in chunks).
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from .errors import EnumerationCapacityError, InvalidParameterError
from .reliability import Configuration, EchelonRates

__all__ = [
    "MAX_ENUMERATION_COMPONENTS",
    "supplier_index",
    "plant_index",
    "line_index",
    "availability_vector",
    "structure",
    "enumerate_reliability",
    "enumerate_conditional",
    "criticality_by_enumeration",
]

MAX_ENUMERATION_COMPONENTS = 24

_CHUNK = 1 << 18


def supplier_index(cfg: Configuration, i: int) -> int:
    """Canonical component index of supplier i (0-based)."""
    if not 0 <= i < cfg.suppliers:
        raise InvalidParameterError(f"supplier index {i} out of range for {cfg.label()}")
    return i


def plant_index(cfg: Configuration, j: int) -> int:
    """Canonical component index of plant j (0-based)."""
    if not 0 <= j < cfg.plants:
        raise InvalidParameterError(f"plant index {j} out of range for {cfg.label()}")
    return cfg.suppliers + j


def line_index(cfg: Configuration, j: int, k: int) -> int:
    """Canonical component index of line k within plant j (0-based)."""
    if not 0 <= j < cfg.plants:
        raise InvalidParameterError(f"plant index {j} out of range for {cfg.label()}")
    if not 0 <= k < cfg.lines_per_plant:
        raise InvalidParameterError(f"line index {k} out of range for {cfg.label()}")
    return cfg.suppliers + cfg.plants + j * cfg.lines_per_plant + k


def availability_vector(cfg: Configuration, rates: EchelonRates) -> np.ndarray:
    """Per-component steady-state availabilities in canonical order."""
    return np.array(
        [rates.supplier.availability] * cfg.suppliers
        + [rates.plant.availability] * cfg.plants
        + [rates.line.availability] * cfg.total_lines
    )


def structure(state: Sequence[bool], cfg: Configuration) -> bool:
    """True when the component-state vector lets the system meet demand."""
    if len(state) != cfg.total_components:
        raise InvalidParameterError(
            f"state has {len(state)} entries, configuration {cfg.label()} "
            f"has {cfg.total_components} components"
        )
    up = [bool(x) for x in state]
    if not any(up[: cfg.suppliers]):
        return False
    lines_start = cfg.suppliers + cfg.plants
    for j in range(cfg.plants):
        if not up[cfg.suppliers + j]:
            continue
        lines = up[lines_start + j * cfg.lines_per_plant : lines_start + (j + 1) * cfg.lines_per_plant]
        if any(lines):
            return True
    return False


def _structure_mask(bits: np.ndarray, cfg: Configuration) -> np.ndarray:
    """Vectorized structure function over a (states, components) boolean matrix."""
    suppliers_ok = bits[:, : cfg.suppliers].any(axis=1)
    lines_start = cfg.suppliers + cfg.plants
    production_ok = np.zeros(bits.shape[0], dtype=bool)
    for j in range(cfg.plants):
        own_lines = bits[:, lines_start + j * cfg.lines_per_plant : lines_start + (j + 1) * cfg.lines_per_plant]
        production_ok |= bits[:, cfg.suppliers + j] & own_lines.any(axis=1)
    return suppliers_ok & production_ok


def _enumerate(avail: np.ndarray, cfg: Configuration) -> float:
    n = int(avail.size)
    if n > MAX_ENUMERATION_COMPONENTS:
        raise EnumerationCapacityError(
            f"{cfg.label()} has {n} components; enumeration is capped at "
            f"{MAX_ENUMERATION_COMPONENTS}"
        )
    exponents = np.arange(n, dtype=np.uint32)
    total = 0.0
    for start in range(0, 1 << n, _CHUNK):
        states = np.arange(start, min(start + _CHUNK, 1 << n), dtype=np.uint32)
        bits = ((states[:, None] >> exponents) & 1).astype(bool)
        prob = np.ones(states.size)
        for c in range(n):
            prob *= np.where(bits[:, c], avail[c], 1.0 - avail[c])
        total += float(prob[_structure_mask(bits, cfg)].sum())
    return total


def enumerate_reliability(cfg: Configuration, rates: EchelonRates) -> float:
    """System reliability by exhaustive summation over all component states."""
    return _enumerate(availability_vector(cfg, rates), cfg)


def enumerate_conditional(
    cfg: Configuration, rates: EchelonRates, component: int, up: bool
) -> float:
    """System reliability conditioned on one component being pinned up or down.

    Pinning is equivalent to setting that component's availability to 1 or 0
    before summing, which leaves exactly the conditional distribution over the
    remaining components.
    """
    avail = availability_vector(cfg, rates)
    if not 0 <= component < avail.size:
        raise InvalidParameterError(
            f"component index {component} out of range for {cfg.label()}"
        )
    avail[component] = 1.0 if up else 0.0
    return _enumerate(avail, cfg)


def criticality_by_enumeration(
    cfg: Configuration, rates: EchelonRates, component: int
) -> float:
    """Probability that this component's failure causes a system failure."""
    return enumerate_conditional(cfg, rates, component, True) - enumerate_conditional(
        cfg, rates, component, False
    )
