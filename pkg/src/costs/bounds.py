"""Per-operation cost bounds in terms of the bucket count k."""

from dataclasses import dataclass
from enum import Enum

from bucketed_balances.types import OpCost


class Operation(str, Enum):
    INSERT = "insert"
    CONSUME = "consume"
    TRANSFER = "transfer"
    PRUNE = "prune"
    BALANCE = "balance"


# Fixed once; tests must never loosen these per case.
LINEAR_SLOPE = 4
LINEAR_INTERCEPT = 4
QUADRATIC_SLOPE = 4
QUADRATIC_INTERCEPT = 8


@dataclass(frozen=True)
class CostBound:
    """``slope * (k + 1) + intercept``, or ``slope * (k + 1)**2 + intercept``."""

    operation: Operation
    slope: int
    intercept: int
    quadratic: bool = False

    def evaluate(self, bucket_count: int) -> int:
        n = bucket_count + 1
        return self.slope * (n * n if self.quadratic else n) + self.intercept

    def describe(self) -> str:
        power = "^2" if self.quadratic else ""
        return f"{self.slope}*(k+1){power} + {self.intercept}"


COST_BOUNDS: dict[Operation, CostBound] = {
    op: CostBound(op, LINEAR_SLOPE, LINEAR_INTERCEPT)
    for op in (Operation.INSERT, Operation.CONSUME, Operation.PRUNE, Operation.BALANCE)
}
COST_BOUNDS[Operation.TRANSFER] = CostBound(
    Operation.TRANSFER, QUADRATIC_SLOPE, QUADRATIC_INTERCEPT, quadratic=True
)


def assert_bound(cost: OpCost, bucket_count: int, bound: CostBound | Operation) -> bool:
    """True iff the unweighted total of ``cost`` stays within ``bound`` at k.

    Args:
        cost: Counters of one operation run with this bucket count
        bucket_count: k of the resource the operation ran on
        bound: A CostBound, or an Operation to look up in COST_BOUNDS
    """
    if isinstance(bound, Operation):
        bound = COST_BOUNDS[bound]
    return cost.total <= bound.evaluate(bucket_count)
