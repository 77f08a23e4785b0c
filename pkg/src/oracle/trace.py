"""Ledger operation traces: value types, a seeded generator and differential replay."""

import logging
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from bucketed_balances.exceptions import BucketedBalanceError
from bucketed_balances.ledger import BookFactory, Ledger
from bucketed_balances.oracle.books import NaiveBucketedBook
from bucketed_balances.oracle.equivalence import EquivalenceReport, aggregate_by_expiry
from bucketed_balances.types import OpCost

logger = logging.getLogger(__name__)

OK = "ok"


@dataclass(frozen=True)
class DefineResource:
    resource: str
    ttl: int
    bucket_count: int

    def apply(self, ledger: Ledger) -> None:
        ledger.define_resource(self.resource, self.ttl, self.bucket_count)

    def argv(self) -> list[str]:
        return ["define-resource", self.resource, "--ttl", str(self.ttl), "--k", str(self.bucket_count)]


@dataclass(frozen=True)
class Mint:
    account: str
    resource: str
    amount: int

    def apply(self, ledger: Ledger) -> OpCost:
        return ledger.mint(self.account, self.resource, self.amount)

    def argv(self) -> list[str]:
        return ["mint", self.account, self.resource, str(self.amount)]


@dataclass(frozen=True)
class Burn:
    account: str
    resource: str
    amount: int

    def apply(self, ledger: Ledger) -> OpCost:
        return ledger.burn(self.account, self.resource, self.amount)

    def argv(self) -> list[str]:
        return ["burn", self.account, self.resource, str(self.amount)]


@dataclass(frozen=True)
class Transfer:
    from_account: str
    to_account: str
    resource: str
    amount: int

    def apply(self, ledger: Ledger) -> OpCost:
        return ledger.transfer(self.from_account, self.to_account, self.resource, self.amount)

    def argv(self) -> list[str]:
        return ["transfer", self.from_account, self.to_account, self.resource, str(self.amount)]


@dataclass(frozen=True)
class Advance:
    to: int

    def apply(self, ledger: Ledger) -> None:
        ledger.advance_clock(self.to)

    def argv(self) -> list[str]:
        return ["advance", str(self.to)]


@dataclass(frozen=True)
class Prune:
    account: str
    resource: str

    def apply(self, ledger: Ledger) -> OpCost:
        return ledger.prune(self.account, self.resource)

    def argv(self) -> list[str]:
        return ["prune", self.account, self.resource]


@dataclass(frozen=True)
class Balance:
    account: str
    resource: str

    def apply(self, ledger: Ledger) -> OpCost:
        cost = OpCost()
        ledger.balance_of(self.account, self.resource, cost)
        return cost

    def argv(self) -> list[str]:
        return ["balance", self.account, self.resource]


TraceOp = DefineResource | Mint | Burn | Transfer | Advance | Prune | Balance


def render(op: TraceOp) -> str:
    """One-line text form of an operation, matching the CLI grammar."""
    return " ".join(op.argv())


def apply_op(ledger: Ledger, op: TraceOp) -> str:
    """Apply ``op`` and return ``"ok"`` or the name of the library error it raised."""
    try:
        op.apply(ledger)
    except BucketedBalanceError as e:
        return type(e).__name__
    return OK


def replay(trace: Iterable[TraceOp], ledger: Ledger | None = None) -> tuple[Ledger, list[str]]:
    """Apply a whole trace, collecting the outcome of every operation."""
    ledger = ledger if ledger is not None else Ledger()
    outcomes = [apply_op(ledger, op) for op in trace]
    return ledger, outcomes


def random_trace(
    seed: int | random.Random,
    length: int,
    *,
    ttl: int = 1000,
    bucket_count: int = 5,
    resource: str = "credits",
    accounts: Sequence[str] = ("alice", "bob", "carol"),
    max_amount: int = 50,
    max_step: int | None = None,
) -> list[TraceOp]:
    """Seeded random trace starting with the resource definition.

    Burn and transfer amounts range up to twice ``max_amount`` so that
    insufficient-balance outcomes occur regularly. Clock steps default to at
    most two bucket widths.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    width = (ttl + bucket_count - 1) // bucket_count
    max_step = max_step if max_step is not None else 2 * width
    trace: list[TraceOp] = [DefineResource(resource, ttl, bucket_count)]
    clock = 0
    kinds = ("mint", "burn", "transfer", "advance", "prune")
    weights = (35, 20, 20, 20, 5)
    for _ in range(length - 1):
        kind = rng.choices(kinds, weights)[0]
        if kind == "mint":
            trace.append(Mint(rng.choice(accounts), resource, rng.randint(1, max_amount)))
        elif kind == "burn":
            trace.append(Burn(rng.choice(accounts), resource, rng.randint(1, 2 * max_amount)))
        elif kind == "transfer":
            sender, recipient = rng.sample(list(accounts), 2)
            trace.append(Transfer(sender, recipient, resource, rng.randint(1, 2 * max_amount)))
        elif kind == "advance":
            clock += rng.randint(0, max_step)
            trace.append(Advance(clock))
        else:
            trace.append(Prune(rng.choice(accounts), resource))
    return trace


def replay_differential(
    trace: Sequence[TraceOp],
    naive_factory: BookFactory = NaiveBucketedBook,
    on_step: Callable[[Ledger, Ledger], None] | None = None,
) -> EquivalenceReport:
    """Run a trace against the coalesced ledger and a naive ledger in lockstep.

    After every step the outcomes, every book's per-expiry aggregate and every
    valid balance must agree.

    Args:
        trace: Operations to replay
        naive_factory: Book type of the reference ledger
        on_step: Optional hook called with (coalesced, naive) after each step

    Returns:
        An equivalent report, or the first divergence with the trace prefix
        leading to it
    """
    coalesced = Ledger()
    naive = Ledger(naive_factory)
    for step, op in enumerate(trace):
        left = apply_op(coalesced, op)
        right = apply_op(naive, op)
        if left != right:
            return EquivalenceReport(
                equivalent=False,
                trace_prefix=_rendered(trace, step),
                detail=f"step {step}: outcome {left} != {right}",
            )
        keys = {(a, r) for a, r, _ in coalesced.books()} | {(a, r) for a, r, _ in naive.books()}
        for account, resource in sorted(keys):
            left_records = coalesced.records_of(account, resource)
            right_records = naive.records_of(account, resource)
            left_agg = aggregate_by_expiry(left_records)
            right_agg = aggregate_by_expiry(right_records)
            if left_agg != right_agg:
                return EquivalenceReport(
                    equivalent=False,
                    coalesced=left_agg,
                    naive=right_agg,
                    trace_prefix=_rendered(trace, step),
                    detail=f"step {step}: aggregates differ for {account}/{resource}",
                )
            left_balance = coalesced.balance_of(account, resource)
            right_balance = naive.balance_of(account, resource)
            if left_balance != right_balance:
                return EquivalenceReport(
                    equivalent=False,
                    coalesced=left_agg,
                    naive=right_agg,
                    trace_prefix=_rendered(trace, step),
                    detail=(
                        f"step {step}: balance {left_balance} != {right_balance} "
                        f"for {account}/{resource}"
                    ),
                )
        if on_step is not None:
            on_step(coalesced, naive)
    logger.debug("Differential replay of %d ops matched", len(trace))
    return EquivalenceReport(equivalent=True)


def _rendered(trace: Sequence[TraceOp], step: int) -> list[str]:
    return [render(op) for op in trace[: step + 1]]
