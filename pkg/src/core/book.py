"""Sorted balance-record books.

``SortedBook`` holds the FIFO consume, prune and balance logic shared by every
book kept sorted by expiry. ``RecordBook`` adds the coalescing insert that
keeps expirations distinct and the book length within ``k + 1``.
"""

from abc import ABC, abstractmethod
from typing import Iterable, Iterator

from bucketed_balances.config import ResourceConfig
from bucketed_balances.core.bucketing import bucketed_expiry
from bucketed_balances.exceptions import (
    InvalidArgumentError,
    MisalignedExpiryError,
    StaleExpiryError,
)
from bucketed_balances.types import (
    BalanceRecord,
    ConsumedSlice,
    ConsumeResult,
    ConsumeStatus,
    OpCost,
)
from bucketed_balances.utils.arithmetic import checked_add_amount
from bucketed_balances.utils.validation import validate_amount


class SortedBook(ABC):
    """Records sorted by non-decreasing expiry with amounts > 0 at rest.

    Expired records (``expires_at <= now``) therefore always form a prefix.
    """

    __slots__ = ("config", "_records")

    def __init__(self, config: ResourceConfig, records: Iterable[BalanceRecord] = ()):
        self.config = config
        self._records: list[BalanceRecord] = list(records)

    @classmethod
    def from_pairs(
        cls, config: ResourceConfig, pairs: Iterable[tuple[int, int]], **kwargs
    ) -> "SortedBook":
        """Build a book from (amount, expires_at) pairs, checking its invariants.

        Raises:
            InvalidArgumentError: If the pairs violate the book invariants
        """
        book = cls(config, (BalanceRecord(a, e) for a, e in pairs), **kwargs)
        violations = book.check_invariants()
        if violations:
            raise InvalidArgumentError(
                f"{cls.__name__} invariant violated: {'; '.join(violations)}"
            )
        return book

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self) -> Iterator[BalanceRecord]:
        return iter(self._records)

    def __bool__(self) -> bool:
        return bool(self._records)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.config == other.config and self._records == other._records

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.pairs()!r})"

    @property
    def records(self) -> tuple[BalanceRecord, ...]:
        return tuple(self._records)

    def pairs(self) -> list[tuple[int, int]]:
        return [(r.amount, r.expires_at) for r in self._records]

    def snapshot(self) -> tuple[BalanceRecord, ...]:
        return tuple(self._records)

    def restore(self, state: tuple[BalanceRecord, ...]) -> None:
        self._records[:] = state

    def copy(self) -> "SortedBook":
        clone = object.__new__(type(self))
        for klass in type(self).__mro__:
            for slot in getattr(klass, "__slots__", ()):
                setattr(clone, slot, getattr(self, slot))
        clone._records = list(self._records)
        return clone

    def check_invariants(self) -> list[str]:
        """Describe every at-rest invariant the book currently violates."""
        violations = []
        previous = None
        for index, record in enumerate(self._records):
            if record.amount <= 0:
                violations.append(f"record {index} has non-positive amount {record.amount}")
            if previous is not None and record.expires_at < previous:
                violations.append(f"record {index} breaks expiry order")
            previous = record.expires_at
        return violations

    @abstractmethod
    def expiry_for(self, deposit_time: int) -> int:
        """Expiry assigned to a deposit made at ``deposit_time``."""

    @abstractmethod
    def insert(self, amount: int, expiry: int, now: int, cost: OpCost | None = None) -> None:
        """Add ``amount`` units expiring at ``expiry``."""

    def consume(self, amount: int, now: int, cost: OpCost | None = None) -> ConsumeResult:
        """Withdraw ``amount`` units FIFO from records valid at ``now``.

        Nothing is mutated unless the whole amount is available. On success the
        expired prefix and every drained record are removed in one compaction.

        Args:
            amount: Units to withdraw (> 0)
            now: Current time
            cost: Optional counters to accumulate into

        Returns:
            ConsumeResult with the consumed slice, or INSUFFICIENT_BALANCE and an
            empty slice

        Raises:
            ZeroAmountError: If amount is zero
        """
        validate_amount(amount, "consume")
        cost = cost if cost is not None else OpCost()
        records = self._records

        remaining = amount
        parts: list[tuple[int, int]] = []
        last = -1
        for index, record in enumerate(records):
            cost.records_visited += 1
            if record.expires_at <= now:
                continue
            delta = min(remaining, record.amount)
            parts.append((delta, record.expires_at))
            remaining -= delta
            if remaining == 0:
                last = index
                break

        if remaining:
            return ConsumeResult(ConsumeStatus.INSUFFICIENT_BALANCE)

        tail = records[last]
        left = tail.amount - parts[-1][0]
        if left:
            records[last] = BalanceRecord(left, tail.expires_at)
            cost.records_written += 1
            end = last
        else:
            end = last + 1
        if end:
            survivors = len(records) - end
            del records[:end]
            cost.records_deleted += end
            cost.records_shifted += survivors
        return ConsumeResult(ConsumeStatus.SUCCESS, ConsumedSlice(tuple(parts)))

    def prune(self, now: int, cost: OpCost | None = None) -> None:
        """Drop records that are expired at ``now`` or hold no units. Idempotent."""
        cost = cost if cost is not None else OpCost()
        kept: list[BalanceRecord] = []
        for index, record in enumerate(self._records):
            cost.records_visited += 1
            if record.expires_at > now and record.amount > 0:
                if index != len(kept):
                    cost.records_shifted += 1
                kept.append(record)
        cost.records_deleted += len(self._records) - len(kept)
        self._records[:] = kept

    def valid_balance(self, now: int, cost: OpCost | None = None) -> int:
        """Sum of amounts still valid at ``now``; never mutates.

        Raises:
            AmountOverflowError: If the sum exceeds the 128-bit range
        """
        cost = cost if cost is not None else OpCost()
        total = 0
        for record in self._records:
            cost.records_visited += 1
            if record.expires_at > now:
                total = checked_add_amount(total, record.amount)
        return total

    def _expired_prefix(self, now: int, cost: OpCost) -> int:
        """Count the leading expired records, visiting each once."""
        records = self._records
        index = 0
        while index < len(records) and records[index].expires_at <= now:
            cost.records_visited += 1
            index += 1
        return index

    def _drop_prefix(self, count: int, cost: OpCost) -> None:
        if count:
            survivors = len(self._records) - count
            del self._records[:count]
            cost.records_deleted += count
            cost.records_shifted += survivors

    def _check_insert_args(self, amount: int, expiry: int, now: int, aligned: bool) -> None:
        validate_amount(amount, "insert")
        if aligned and expiry % self.config.bucket_width:
            raise MisalignedExpiryError(expiry, self.config.bucket_width)
        if expiry <= now:
            raise StaleExpiryError(expiry, now)


class RecordBook(SortedBook):
    """Coalescing book: strictly increasing, bucket-aligned expirations."""

    __slots__ = ()

    def expiry_for(self, deposit_time: int) -> int:
        return bucketed_expiry(deposit_time, self.config.ttl, self.config.bucket_width)

    def check_invariants(self) -> list[str]:
        violations = super().check_invariants()
        width = self.config.bucket_width
        for index, record in enumerate(self._records):
            if record.expires_at % width:
                violations.append(
                    f"record {index} expiry {record.expires_at} is not a multiple of {width}"
                )
            if index and record.expires_at == self._records[index - 1].expires_at:
                violations.append(f"record {index} repeats expiry {record.expires_at}")
        if len(self._records) > self.config.max_records:
            violations.append(
                f"{len(self._records)} records exceed the bound {self.config.max_records}"
            )
        return violations

    def insert(self, amount: int, expiry: int, now: int, cost: OpCost | None = None) -> None:
        """Prune expired records, then coalesce into or insert at ``expiry``.

        Expired records are a prefix, so the prune and the position search share
        one forward scan.

        Raises:
            ZeroAmountError: If amount is zero
            MisalignedExpiryError: If expiry is not a bucket boundary
            StaleExpiryError: If expiry <= now
            AmountOverflowError: If coalescing overflows; the book is left unchanged
        """
        self._check_insert_args(amount, expiry, now, aligned=True)
        cost = cost if cost is not None else OpCost()
        records = self._records

        expired = self._expired_prefix(now, cost)
        position = len(records)
        match = False
        for index in range(expired, len(records)):
            cost.records_visited += 1
            current = records[index].expires_at
            if current >= expiry:
                position = index
                match = current == expiry
                break

        merged = checked_add_amount(records[position].amount, amount) if match else amount

        self._drop_prefix(expired, cost)
        position -= expired
        if match:
            records[position] = BalanceRecord(merged, expiry)
            cost.records_written += 1
        else:
            cost.records_shifted += len(records) - position
            records.insert(position, BalanceRecord(amount, expiry))
            cost.records_created += 1
            cost.records_written += 1
