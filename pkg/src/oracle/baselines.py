"""Bounded designs that give up the TTL guarantee, and a witness finder for it."""

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from bucketed_balances.config import ResourceConfig
from bucketed_balances.core.bucketing import exact_expiry
from bucketed_balances.types import OpCost
from bucketed_balances.utils.arithmetic import checked_add_amount
from bucketed_balances.utils.validation import validate_amount


class SingleTimestampBook:
    """One amount and one expiry per account.

    A deposit into a live balance inherits the existing expiry, so later
    deposits can expire before their own ``t + ttl``.
    """

    def __init__(self, config: ResourceConfig):
        self.config = config
        self.amount = 0
        self.expires_at = 0

    def expiry_for(self, deposit_time: int) -> int:
        return exact_expiry(deposit_time, self.config.ttl)

    def insert(self, amount: int, expiry: int, now: int, cost: OpCost | None = None) -> None:
        validate_amount(amount, "insert")
        if self.expires_at <= now:
            self.amount = 0
            self.expires_at = expiry
        self.amount = checked_add_amount(self.amount, amount)

    def valid_balance(self, now: int, cost: OpCost | None = None) -> int:
        return self.amount if self.expires_at > now else 0

    def __len__(self) -> int:
        return 1 if self.amount else 0


class CircularBufferBook:
    """``bucket_count`` slots evicting by insertion order when full."""

    def __init__(self, config: ResourceConfig):
        self.config = config
        self._slots: deque[tuple[int, int]] = deque(maxlen=config.bucket_count)

    def expiry_for(self, deposit_time: int) -> int:
        return exact_expiry(deposit_time, self.config.ttl)

    def insert(self, amount: int, expiry: int, now: int, cost: OpCost | None = None) -> None:
        validate_amount(amount, "insert")
        self._slots.append((amount, expiry))

    def valid_balance(self, now: int, cost: OpCost | None = None) -> int:
        return sum(amount for amount, expiry in self._slots if expiry > now)

    def __len__(self) -> int:
        return len(self._slots)


@dataclass(frozen=True)
class TtlViolation:
    """A time at which deposited units were gone before their TTL elapsed."""

    time: int
    expected_at_least: int
    actual: int


def find_ttl_violation(
    book, deposits: Iterable[tuple[int, int]]
) -> TtlViolation | None:
    """Replay deposits and look for units that vanish before ``t + ttl``.

    Each deposit (time, amount) must stay valid on ``[t, t + ttl)``. The
    balance is checked at every deposit time and at the last valid second of
    every deposit.

    Args:
        book: Any book offering ``expiry_for``, ``insert`` and ``valid_balance``
        deposits: (time, amount) pairs with non-decreasing times

    Returns:
        The first violation found, or None when the TTL guarantee held
    """
    ttl = book.config.ttl
    schedule = sorted(deposits, key=lambda d: d[0])
    check_times = sorted({t for t, _ in schedule} | {t + ttl - 1 for t, _ in schedule})

    applied = 0
    for at in check_times:
        while applied < len(schedule) and schedule[applied][0] <= at:
            time, amount = schedule[applied]
            book.insert(amount, book.expiry_for(time), time)
            applied += 1
        expected = sum(a for t, a in schedule[:applied] if t <= at < t + ttl)
        actual = book.valid_balance(at)
        if actual < expected:
            return TtlViolation(time=at, expected_at_least=expected, actual=actual)
    return None
