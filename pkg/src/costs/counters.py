"""Counter plumbing for running a single operation under instrumentation."""

from typing import Callable

from bucketed_balances.types import OpCost


def instrument(operation: Callable[[OpCost], object]) -> OpCost:
    """Run ``operation`` with freshly zeroed counters and return them.

    Example:
        >>> cost = instrument(lambda c: book.insert(10, 250, 0, c))
    """
    cost = OpCost()
    operation(cost)
    return cost
