"""Reliability, shortage-risk, and profitability analysis for three-echelon
pharmaceutical supply chains (suppliers, plants, lines), with closed forms
validated by exact state enumeration and continuous-time simulation."""

from .economics import (
    BASELINE_ECONOMICS,
    EconomicsParams,
    ProfitCurve,
    breakeven_price,
    expected_profit,
    profit_scan,
    threshold_price,
    total_fixed_cost,
)
from .errors import (
    DegenerateComparisonError,
    EnumerationCapacityError,
    InvalidParameterError,
    NoCrossingError,
    VerificationError,
)
from .oracle import (
    criticality_by_enumeration,
    enumerate_conditional,
    enumerate_reliability,
    structure,
)
from .reliability import (
    BASELINE_RATES,
    ComponentRates,
    Configuration,
    EchelonRates,
    RateMultipliers,
    ReliabilityReport,
    component_availability,
    evaluate,
    expected_shortage,
    line_criticality,
    mean_downtime,
    mean_uptime,
    plant_criticality,
    production_stage_reliability,
    supplier_criticality,
    supplier_stage_reliability,
    system_reliability,
)
from .runconfig import RunConfig, load_run_config, run_config_from_dict
from .scenario import (
    DEFAULT_COMPARISON_CONFIGURATIONS,
    DEFAULT_DISRUPTION_MULTIPLIERS,
    DEFAULT_RECOVERY_MULTIPLIERS,
    SweepRow,
    SweepSpec,
    combined_strategies,
    factorial_configurations,
    multiplier_sweep,
    run_sweep,
)
from .simulation import (
    DEFAULT_SEED,
    ReplicationStats,
    SimulationResult,
    SimulationSpec,
    simulate,
)

__version__ = "0.1.0"
