"""Record and slice value types shared by all book implementations."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator


@dataclass(frozen=True, slots=True)
class BalanceRecord:
    """One (amount, expiration) pair of a book."""

    amount: int
    expires_at: int

    def as_pair(self) -> tuple[int, int]:
        return (self.amount, self.expires_at)


class ConsumeStatus(str, Enum):
    """Outcome of a consume or transfer."""

    SUCCESS = "Success"
    INSUFFICIENT_BALANCE = "InsufficientBalance"


@dataclass(frozen=True, slots=True)
class ConsumedSlice:
    """(amount, expiry) pairs taken by a consume, oldest expiration first.

    Expirations are strictly increasing for a coalesced book. Slices from the
    naive oracle may repeat an expiry; compare them through
    ``aggregate_by_expiry``.
    """

    parts: tuple[tuple[int, int], ...] = ()

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(amount for amount, _ in self.parts)

    @property
    def expirations(self) -> list[int]:
        return [expiry for _, expiry in self.parts]


@dataclass(frozen=True, slots=True)
class ConsumeResult:
    """Status plus the consumed slice (empty unless successful)."""

    status: ConsumeStatus
    consumed: ConsumedSlice = field(default_factory=ConsumedSlice)

    @property
    def ok(self) -> bool:
        return self.status is ConsumeStatus.SUCCESS
