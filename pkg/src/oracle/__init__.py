"""Reference models for differential testing."""

from bucketed_balances.oracle.baselines import (
    CircularBufferBook,
    SingleTimestampBook,
    TtlViolation,
    find_ttl_violation,
)
from bucketed_balances.oracle.books import ExactExpiryBook, NaiveBucketedBook
from bucketed_balances.oracle.equivalence import (
    EquivalenceReport,
    aggregate_by_expiry,
    check_dominance,
    check_equivalence,
)
from bucketed_balances.oracle.trace import (
    Advance,
    Balance,
    Burn,
    DefineResource,
    Mint,
    Prune,
    Transfer,
    TraceOp,
    apply_op,
    random_trace,
    render,
    replay,
    replay_differential,
)

__all__ = [
    "Advance",
    "Balance",
    "Burn",
    "CircularBufferBook",
    "DefineResource",
    "EquivalenceReport",
    "ExactExpiryBook",
    "Mint",
    "NaiveBucketedBook",
    "Prune",
    "SingleTimestampBook",
    "TraceOp",
    "Transfer",
    "TtlViolation",
    "aggregate_by_expiry",
    "apply_op",
    "check_dominance",
    "check_equivalence",
    "find_ttl_violation",
    "random_trace",
    "render",
    "replay",
    "replay_differential",
]
