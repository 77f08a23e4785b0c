"""Worst-case traces, measurements and randomized cost maxima."""

import logging
import random
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from bucketed_balances.core.bucketing import bucket_width, bucketed_expiry
from bucketed_balances.costs.bounds import Operation
from bucketed_balances.exceptions import BucketedBalanceError
from bucketed_balances.ledger import Ledger
from bucketed_balances.oracle.trace import (
    Advance,
    Balance,
    Burn,
    DefineResource,
    Mint,
    Prune,
    Transfer,
    TraceOp,
    apply_op,
    random_trace,
    replay,
)
from bucketed_balances.types import OpCost

logger = logging.getLogger(__name__)

DEFAULT_WIDTH = 1000
VICTIM = "victim"
SINK = "sink"
RESOURCE = "credits"


class ScenarioKind(str, Enum):
    BURN_ALL = "burnAll"
    TRANSFER_ALL = "transferAll"
    INSERT_NEW = "insertNew"
    PRUNE_ALL = "pruneAll"
    BALANCE = "balance"


SCENARIO_OPERATION = {
    ScenarioKind.BURN_ALL: Operation.CONSUME,
    ScenarioKind.TRANSFER_ALL: Operation.TRANSFER,
    ScenarioKind.INSERT_NEW: Operation.INSERT,
    ScenarioKind.PRUNE_ALL: Operation.PRUNE,
    ScenarioKind.BALANCE: Operation.BALANCE,
}


def worst_case_scenario(
    bucket_count: int, kind: ScenarioKind | str, ttl: int | None = None
) -> list[TraceOp]:
    """Trace filling one book with distinct expirations, then the measured op.

    One unit is minted one second into each of k + 1 consecutive bucket
    windows, which yields k + 1 live records whenever the TTL allows it. The
    last operation of the trace is the one to measure: the final mint for
    ``insertNew``, otherwise a burn, transfer (into an empty book), prune
    (after every record expired) or balance query over the whole book.

    Args:
        bucket_count: k (>= 1)
        kind: Scenario kind
        ttl: TTL in seconds; defaults to ``1000 * k`` so every bucket is 1000 s
    """
    kind = ScenarioKind(kind)
    ttl = ttl if ttl is not None else DEFAULT_WIDTH * bucket_count
    width = bucket_width(ttl, bucket_count)

    trace: list[TraceOp] = [DefineResource(RESOURCE, ttl, bucket_count)]
    deposit_times = [i * width + 1 for i in range(bucket_count + 1)]
    for t in deposit_times:
        trace.append(Advance(t))
        trace.append(Mint(VICTIM, RESOURCE, 1))
    if kind is ScenarioKind.INSERT_NEW:
        return trace

    now = deposit_times[-1]
    live = sum(1 for t in deposit_times if bucketed_expiry(t, ttl, width) > now)
    if kind is ScenarioKind.BURN_ALL:
        trace.append(Burn(VICTIM, RESOURCE, live))
    elif kind is ScenarioKind.TRANSFER_ALL:
        trace.append(Transfer(VICTIM, SINK, RESOURCE, live))
    elif kind is ScenarioKind.PRUNE_ALL:
        trace.append(Advance(bucketed_expiry(now, ttl, width)))
        trace.append(Prune(VICTIM, RESOURCE))
    else:
        trace.append(Balance(VICTIM, RESOURCE))
    return trace


@dataclass(frozen=True)
class ScenarioMeasurement:
    kind: ScenarioKind
    bucket_count: int
    records_before: int
    cost: OpCost

    @property
    def operation(self) -> Operation:
        return SCENARIO_OPERATION[self.kind]


def measure_worst_case(
    bucket_count: int, kind: ScenarioKind | str, ttl: int | None = None
) -> ScenarioMeasurement:
    """Replay a worst-case scenario and return the cost of its final operation."""
    kind = ScenarioKind(kind)
    trace = worst_case_scenario(bucket_count, kind, ttl)
    ledger, _ = replay(trace[:-1])
    records_before = ledger.record_count(VICTIM, RESOURCE)
    cost = trace[-1].apply(ledger)
    logger.debug("%s at k=%d: %s", kind.value, bucket_count, cost)
    return ScenarioMeasurement(kind, bucket_count, records_before, cost)


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log(y) against log(x)."""
    slope, _ = np.polyfit(np.log(np.asarray(xs, dtype=float)), np.log(np.asarray(ys, dtype=float)), 1)
    return float(slope)


def complexity_slopes(
    bucket_counts: Sequence[int], kinds: Sequence[ScenarioKind] = tuple(ScenarioKind)
) -> dict[ScenarioKind, float]:
    """Log-log growth of worst-case total cost per scenario over ``bucket_counts``."""
    slopes = {}
    for kind in kinds:
        totals = [measure_worst_case(k, kind).cost.total for k in bucket_counts]
        slopes[kind] = loglog_slope(bucket_counts, totals)
    return slopes


_OP_KINDS = {Mint: Operation.INSERT, Burn: Operation.CONSUME, Transfer: Operation.TRANSFER, Prune: Operation.PRUNE}


def fuzz_max_costs(
    bucket_count: int, seed: int, length: int = 2_000, ttl: int | None = None
) -> dict[Operation, OpCost]:
    """Largest-total cost seen per operation over a seeded random trace.

    The trace spreads small amounts over three accounts with clock steps of
    at most one bucket width, which keeps the books near their bound.
    """
    ttl = ttl if ttl is not None else DEFAULT_WIDTH * bucket_count
    width = bucket_width(ttl, bucket_count)
    trace = random_trace(
        random.Random(seed),
        length,
        ttl=ttl,
        bucket_count=bucket_count,
        accounts=(VICTIM, SINK, "mallory"),
        max_amount=5,
        max_step=width,
    )
    ledger = Ledger()
    maxima: dict[Operation, OpCost] = {}
    for op in trace:
        operation = _OP_KINDS.get(type(op))
        if operation is None:
            apply_op(ledger, op)
            continue
        try:
            cost = op.apply(ledger)
        except BucketedBalanceError:
            continue
        best = maxima.get(operation)
        if best is None or cost.total > best.total:
            maxima[operation] = cost
    return maxima
