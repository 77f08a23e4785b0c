"""Structural interface shared by the coalesced book and the oracle books."""

from typing import Iterator

from typing_extensions import Protocol

from bucketed_balances.config import ResourceConfig
from bucketed_balances.types import BalanceRecord, ConsumeResult, OpCost


class BookProtocol(Protocol):
    """Anything the ledger can store per (account, resource)."""

    config: ResourceConfig

    def __len__(self) -> int: ...

    def __iter__(self) -> Iterator[BalanceRecord]: ...

    def pairs(self) -> list[tuple[int, int]]: ...

    def expiry_for(self, deposit_time: int) -> int:
        """Expiry assigned to a deposit made at ``deposit_time``."""
        ...

    def insert(self, amount: int, expiry: int, now: int, cost: OpCost | None = None) -> None: ...

    def consume(self, amount: int, now: int, cost: OpCost | None = None) -> ConsumeResult: ...

    def prune(self, now: int, cost: OpCost | None = None) -> None: ...

    def valid_balance(self, now: int, cost: OpCost | None = None) -> int: ...

    def snapshot(self) -> tuple[BalanceRecord, ...]: ...

    def restore(self, state: tuple[BalanceRecord, ...]) -> None: ...

    def copy(self) -> "BookProtocol": ...
