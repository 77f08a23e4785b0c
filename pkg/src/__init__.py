"""Bucketed Balances - bounded-storage token balances with time-to-live expiry."""

__version__ = "0.1.0"

from bucketed_balances.config import CostWeights, ResourceConfig
from bucketed_balances.core import RecordBook, bucket_width, bucketed_expiry, transfer
from bucketed_balances.exceptions import (
    BucketedBalanceError,
    CorruptSnapshotError,
    InsufficientBalanceError,
    InvalidArgumentError,
    InvalidConfigError,
    SnapshotError,
)
from bucketed_balances.ledger import Ledger
from bucketed_balances.types import BalanceRecord, ConsumeResult, ConsumeStatus, OpCost

__all__ = [
    "BalanceRecord",
    "BucketedBalanceError",
    "ConsumeResult",
    "ConsumeStatus",
    "CorruptSnapshotError",
    "CostWeights",
    "InsufficientBalanceError",
    "InvalidArgumentError",
    "InvalidConfigError",
    "Ledger",
    "OpCost",
    "RecordBook",
    "ResourceConfig",
    "SnapshotError",
    "bucket_width",
    "bucketed_expiry",
    "transfer",
]
