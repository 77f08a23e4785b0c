"""Abstract operation-cost accounting and bounds."""

from bucketed_balances.costs.bounds import (
    COST_BOUNDS,
    CostBound,
    Operation,
    assert_bound,
)
from bucketed_balances.costs.counters import instrument
from bucketed_balances.costs.report import (
    COST_CSV_COLUMNS,
    TRADEOFF_CSV_COLUMNS,
    CostRow,
    bench_costs,
    render_cost_csv,
    render_tradeoff_csv,
)
from bucketed_balances.costs.scenarios import (
    ScenarioKind,
    ScenarioMeasurement,
    complexity_slopes,
    fuzz_max_costs,
    loglog_slope,
    measure_worst_case,
    worst_case_scenario,
)
from bucketed_balances.types import OpCost

__all__ = [
    "COST_BOUNDS",
    "COST_CSV_COLUMNS",
    "TRADEOFF_CSV_COLUMNS",
    "CostBound",
    "CostRow",
    "OpCost",
    "Operation",
    "ScenarioKind",
    "ScenarioMeasurement",
    "assert_bound",
    "bench_costs",
    "complexity_slopes",
    "fuzz_max_costs",
    "instrument",
    "loglog_slope",
    "measure_worst_case",
    "render_cost_csv",
    "render_tradeoff_csv",
    "worst_case_scenario",
]
