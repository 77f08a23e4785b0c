"""Unbounded reference books: one record per deposit slice, no coalescing."""

from typing import Iterable

from bucketed_balances.config import ResourceConfig
from bucketed_balances.core import SortedBook
from bucketed_balances.core.bucketing import bucketed_expiry, exact_expiry
from bucketed_balances.types import BalanceRecord, OpCost


class _AppendingBook(SortedBook):
    """Sorted book whose insert never merges; equal expiries keep insertion order."""

    __slots__ = ("prune_on_insert",)

    aligned = True

    def __init__(
        self,
        config: ResourceConfig,
        records: Iterable[BalanceRecord] = (),
        prune_on_insert: bool = True,
    ):
        super().__init__(config, records)
        self.prune_on_insert = prune_on_insert

    def insert(self, amount: int, expiry: int, now: int, cost: OpCost | None = None) -> None:
        """Insert a new record after every record expiring at or before ``expiry``.

        The position is searched from the back, so in-order deposits append in
        constant time.
        """
        self._check_insert_args(amount, expiry, now, aligned=self.aligned)
        cost = cost if cost is not None else OpCost()
        records = self._records

        expired = self._expired_prefix(now, cost) if self.prune_on_insert else 0
        position = len(records)
        while position > expired and records[position - 1].expires_at > expiry:
            cost.records_visited += 1
            position -= 1
        if position > expired:
            cost.records_visited += 1

        self._drop_prefix(expired, cost)
        position -= expired
        cost.records_shifted += len(records) - position
        records.insert(position, BalanceRecord(amount, expiry))
        cost.records_created += 1
        cost.records_written += 1


class NaiveBucketedBook(_AppendingBook):
    """Per-deposit records with bucketed expirations.

    With ``prune_on_insert=False`` this is the plain append-only array whose
    length grows with every deposit.
    """

    __slots__ = ()

    def expiry_for(self, deposit_time: int) -> int:
        return bucketed_expiry(deposit_time, self.config.ttl, self.config.bucket_width)

    def check_invariants(self) -> list[str]:
        violations = super().check_invariants()
        width = self.config.bucket_width
        violations.extend(
            f"record {index} expiry {record.expires_at} is not a multiple of {width}"
            for index, record in enumerate(self._records)
            if record.expires_at % width
        )
        return violations


class ExactExpiryBook(_AppendingBook):
    """Per-deposit records expiring at exactly ``deposit_time + ttl``."""

    __slots__ = ()

    aligned = False

    def expiry_for(self, deposit_time: int) -> int:
        return exact_expiry(deposit_time, self.config.ttl)
