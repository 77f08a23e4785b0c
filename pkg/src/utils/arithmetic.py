"""Checked integer arithmetic for token units and timestamps."""

from bucketed_balances.config import AMOUNT_MAX, TIMESTAMP_MAX
from bucketed_balances.exceptions import AmountOverflowError, TimestampOverflowError


def ceil_div(numerator: int, denominator: int) -> int:
    """Integer ceiling division for non-negative numerator, positive denominator."""
    return (numerator + denominator - 1) // denominator


def checked_add_amount(a: int, b: int) -> int:
    """Add two amounts, raising instead of exceeding the 128-bit range.

    Raises:
        AmountOverflowError: If the sum exceeds AMOUNT_MAX
    """
    total = a + b
    if total > AMOUNT_MAX:
        raise AmountOverflowError(f"Amount overflow: {a} + {b} exceeds 2**128 - 1", AMOUNT_MAX)
    return total


def checked_add_timestamp(a: int, b: int) -> int:
    """Add two timestamps/durations within the timestamp range.

    Raises:
        TimestampOverflowError: If the sum exceeds TIMESTAMP_MAX
    """
    total = a + b
    if total > TIMESTAMP_MAX:
        raise TimestampOverflowError(
            f"Timestamp overflow: {a} + {b} exceeds 2**64 - 1", TIMESTAMP_MAX
        )
    return total
