"""Value types."""

from bucketed_balances.types.costs import OpCost
from bucketed_balances.types.records import (
    BalanceRecord,
    ConsumedSlice,
    ConsumeResult,
    ConsumeStatus,
)

__all__ = [
    "BalanceRecord",
    "ConsumedSlice",
    "ConsumeResult",
    "ConsumeStatus",
    "OpCost",
]
