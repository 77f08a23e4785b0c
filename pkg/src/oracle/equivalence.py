"""Canonical aggregates and the equivalence / dominance checks."""

from dataclasses import dataclass, field
from typing import Iterable

from bucketed_balances.core import BookProtocol
from bucketed_balances.types import BalanceRecord
from bucketed_balances.utils.arithmetic import checked_add_amount


def aggregate_by_expiry(items) -> dict[int, int]:
    """Sum amounts per expiry, omitting zero totals.

    Args:
        items: A book (anything with ``pairs()``), a ConsumedSlice, or an
            iterable of BalanceRecord / (amount, expiry) pairs

    Returns:
        Mapping expiry -> total amount, in ascending expiry order

    Raises:
        AmountOverflowError: If a per-expiry total exceeds the 128-bit range
    """
    if hasattr(items, "pairs"):
        items = items.pairs()
    totals: dict[int, int] = {}
    for item in items:
        amount, expiry = item.as_pair() if isinstance(item, BalanceRecord) else item
        totals[expiry] = checked_add_amount(totals.get(expiry, 0), amount)
    return {expiry: totals[expiry] for expiry in sorted(totals) if totals[expiry]}


@dataclass
class EquivalenceReport:
    """Outcome of a differential comparison; falsy on divergence."""

    equivalent: bool
    coalesced: dict[int, int] = field(default_factory=dict)
    naive: dict[int, int] = field(default_factory=dict)
    trace_prefix: list[str] = field(default_factory=list)
    detail: str = ""

    def __bool__(self) -> bool:
        return self.equivalent

    def render(self) -> str:
        """Text form: the trace prefix one op per line, then both aggregates."""
        lines = ["EQUIVALENT" if self.equivalent else "DIVERGED"]
        if self.detail:
            lines.append(f"detail: {self.detail}")
        lines.append("trace:")
        lines.extend(f"  {op}" for op in self.trace_prefix)
        lines.append(f"coalesced: {_render_aggregate(self.coalesced)}")
        lines.append(f"naive: {_render_aggregate(self.naive)}")
        return "\n".join(lines) + "\n"


def _render_aggregate(aggregate: dict[int, int]) -> str:
    if not aggregate:
        return "{}"
    return "{" + ", ".join(f"{e}: {a}" for e, a in aggregate.items()) + "}"


def check_equivalence(
    coalesced: BookProtocol | None,
    naive: BookProtocol | None,
    trace: Iterable[str] = (),
) -> EquivalenceReport:
    """Compare a coalesced book and a naive book by per-expiry aggregates.

    Either side may be None, which stands for an absent (empty) book.
    """
    left = aggregate_by_expiry(coalesced) if coalesced is not None else {}
    right = aggregate_by_expiry(naive) if naive is not None else {}
    equivalent = left == right
    return EquivalenceReport(
        equivalent=equivalent,
        coalesced=left,
        naive=right,
        trace_prefix=list(trace),
        detail="" if equivalent else "per-expiry aggregates differ",
    )


def check_dominance(coalesced: BookProtocol, exact: BookProtocol, now: int) -> bool:
    """True iff the bucketed book's valid balance is at least the exact book's."""
    return coalesced.valid_balance(now) >= exact.valid_balance(now)
