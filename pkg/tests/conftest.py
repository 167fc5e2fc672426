import numpy as np
import pytest

from pharmrel import ComponentRates, Configuration, EchelonRates


@pytest.fixture
def lean() -> Configuration:
    return Configuration(1, 1, 1)


@pytest.fixture
def five_configs() -> list[Configuration]:
    """Lean plus the four single/double-backup variants used in comparisons."""
    return [
        Configuration(1, 1, 1),
        Configuration(1, 1, 2),
        Configuration(1, 2, 1),
        Configuration(2, 1, 1),
        Configuration(2, 2, 1),
    ]


def random_rates(rng: np.random.Generator) -> EchelonRates:
    """Random but well-conditioned mean times for property checks."""

    def component() -> ComponentRates:
        return ComponentRates(
            mean_time_to_fail=float(rng.uniform(0.5, 50.0)),
            mean_time_to_recover=float(rng.uniform(0.02, 5.0)),
        )

    return EchelonRates(supplier=component(), plant=component(), line=component())
