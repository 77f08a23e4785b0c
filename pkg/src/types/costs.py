"""Abstract operation-cost counters."""

from dataclasses import astuple, dataclass, fields

from bucketed_balances.config import CostWeights


@dataclass(slots=True)
class OpCost:
    """Record-level work done by one operation.

    Creating a record writes a slot, so every creation also counts as a write.
    """

    records_visited: int = 0
    records_shifted: int = 0
    records_created: int = 0
    records_written: int = 0
    records_deleted: int = 0

    def __add__(self, other: "OpCost") -> "OpCost":
        return OpCost(*(a + b for a, b in zip(astuple(self), astuple(other))))

    def merge(self, other: "OpCost") -> None:
        """Accumulate ``other`` into this counter in place."""
        self.records_visited += other.records_visited
        self.records_shifted += other.records_shifted
        self.records_created += other.records_created
        self.records_written += other.records_written
        self.records_deleted += other.records_deleted

    @property
    def total(self) -> int:
        """Unweighted sum of all counters."""
        return sum(astuple(self))

    def weighted_total(self, weights: CostWeights | None = None) -> int:
        weights = weights or CostWeights()
        return (
            self.records_visited * weights.visited
            + self.records_shifted * weights.shifted
            + self.records_created * weights.created
            + self.records_written * weights.written
            + self.records_deleted * weights.deleted
        )

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}
