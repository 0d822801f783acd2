"""Exact solver, strategy synthesizer, and bound evaluator for the
space-bounded reversible pebble game."""

from .analysis import (
    BEYOND_TABLE,
    FGammaRow,
    ThresholdRecord,
    TsRecord,
    entropy,
    f_bound_lower_sum,
    f_bound_upper_sum,
    f_gamma,
    f_gamma_report,
    min_ts,
    min_ts_auto,
    threshold_record,
    x_lower,
    x_threshold,
    x_upper,
)
from .cost import INFINITE, MAX_FINITE_COST, Cost, format_cost, is_finite, parse_cost
from .dp import (
    DpTables,
    build_table,
    delta,
    f_cost,
    is_solvable,
    split_point,
    table_delta,
)
from .errors import (
    CostOverflowError,
    ResourceLimitError,
    TableRangeError,
    UnsolvableError,
)
from .oracle import bfs_min_time, bfs_path
from .strategy import (
    IntervalView,
    Move,
    ReplayChecker,
    Strategy,
    VerificationReport,
    format_moves,
    iter_strategy_moves,
    parse_moves,
    place,
    remove,
    reverse_strategy,
    synthesize,
    to_intervals,
    verify,
)

__version__ = "0.1.0"
