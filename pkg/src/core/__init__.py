"""Time-bucketing math and the bounded record book."""

from bucketed_balances.core.book import RecordBook, SortedBook
from bucketed_balances.core.bucketing import (
    TradeoffRow,
    bucket_width,
    bucketed_expiry,
    exact_expiry,
    is_bucket_boundary,
    max_extra_lifetime,
    tradeoff,
)
from bucketed_balances.core.protocol import BookProtocol
from bucketed_balances.core.transfer import transfer

__all__ = [
    "BookProtocol",
    "RecordBook",
    "SortedBook",
    "TradeoffRow",
    "bucket_width",
    "bucketed_expiry",
    "exact_expiry",
    "is_bucket_boundary",
    "max_extra_lifetime",
    "tradeoff",
    "transfer",
]
