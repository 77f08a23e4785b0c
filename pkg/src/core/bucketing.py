"""Time-bucketing math: bucket width, bucketed expiry and the precision trade-off."""

from dataclasses import dataclass
from typing import Iterable

from bucketed_balances.config import TIMESTAMP_MAX
from bucketed_balances.exceptions import InvalidConfigError, TimestampOverflowError
from bucketed_balances.utils.arithmetic import ceil_div, checked_add_timestamp


def bucket_width(ttl: int, bucket_count: int) -> int:
    """Width of one bucket, ``ceil(ttl / bucket_count)``.

    Args:
        ttl: TTL in seconds
        bucket_count: Number of buckets k

    Returns:
        Bucket width in seconds (always >= 1)

    Raises:
        InvalidConfigError: If ttl or bucket_count is below 1
    """
    if ttl < 1 or bucket_count < 1:
        raise InvalidConfigError(
            f"ttl and bucket_count must be >= 1 (got ttl={ttl}, k={bucket_count})",
            errors={"ttl": ttl, "bucket_count": bucket_count},
        )
    return ceil_div(ttl, bucket_count)


def bucketed_expiry(deposit_time: int, ttl: int, width: int) -> int:
    """Expiry of a deposit, ``deposit_time + ttl`` rounded up to a bucket boundary.

    The result lies in ``[deposit_time + ttl, deposit_time + ttl + width - 1]``.

    Raises:
        InvalidConfigError: If width is below 1
        TimestampOverflowError: If the sum or the rounded value leaves the timestamp range
    """
    if width < 1:
        raise InvalidConfigError(f"bucket width must be >= 1, got {width}")
    exact = checked_add_timestamp(deposit_time, ttl)
    rounded = ceil_div(exact, width) * width
    if rounded > TIMESTAMP_MAX:
        raise TimestampOverflowError(
            f"Bucketed expiry of {exact} with width {width} exceeds 2**64 - 1", TIMESTAMP_MAX
        )
    return rounded


def exact_expiry(deposit_time: int, ttl: int) -> int:
    """Unrounded expiry ``deposit_time + ttl``."""
    return checked_add_timestamp(deposit_time, ttl)


def is_bucket_boundary(timestamp: int, width: int) -> bool:
    return timestamp % width == 0


def max_extra_lifetime(ttl: int, bucket_count: int) -> int:
    """Largest amount of time a bucketed deposit can outlive its exact expiry."""
    return bucket_width(ttl, bucket_count) - 1


@dataclass(frozen=True)
class TradeoffRow:
    bucket_count: int
    bucket_width: int
    max_extra_lifetime: int
    precision_loss_ppm: int


def tradeoff(ttl: int, bucket_counts: Iterable[int]) -> list[TradeoffRow]:
    """Precision-versus-storage table for one TTL.

    Precision loss is ``max_extra_lifetime / ttl`` in integer parts per million
    (rounded down), so the output is deterministic.
    """
    rows = []
    for k in bucket_counts:
        width = bucket_width(ttl, k)
        extra = width - 1
        rows.append(
            TradeoffRow(
                bucket_count=k,
                bucket_width=width,
                max_extra_lifetime=extra,
                precision_loss_ppm=extra * 1_000_000 // ttl,
            )
        )
    return rows
