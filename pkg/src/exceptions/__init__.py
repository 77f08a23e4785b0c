"""Custom exceptions for the library."""

from bucketed_balances.exceptions.errors import (
    AmountOverflowError,
    ArithmeticOverflowError,
    BucketedBalanceError,
    CorruptSnapshotError,
    DuplicateResourceError,
    InsufficientBalanceError,
    InvalidArgumentError,
    InvalidConfigError,
    InvalidIdentifierError,
    MisalignedExpiryError,
    SelfTransferError,
    SnapshotError,
    StaleExpiryError,
    TimeRegressionError,
    TimestampOverflowError,
    UnknownResourceError,
    UnsupportedSnapshotVersionError,
    ZeroAmountError,
)

__all__ = [
    "BucketedBalanceError",
    "InvalidConfigError",
    "InvalidArgumentError",
    "ZeroAmountError",
    "SelfTransferError",
    "InvalidIdentifierError",
    "MisalignedExpiryError",
    "StaleExpiryError",
    "ArithmeticOverflowError",
    "AmountOverflowError",
    "TimestampOverflowError",
    "InsufficientBalanceError",
    "UnknownResourceError",
    "DuplicateResourceError",
    "TimeRegressionError",
    "SnapshotError",
    "CorruptSnapshotError",
    "UnsupportedSnapshotVersionError",
]
