"""CSV rendering of cost measurements."""

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Sequence

from bucketed_balances.config import CostWeights
from bucketed_balances.core.bucketing import TradeoffRow
from bucketed_balances.costs.bounds import Operation
from bucketed_balances.costs.scenarios import ScenarioKind, fuzz_max_costs, measure_worst_case
from bucketed_balances.types import OpCost

COST_CSV_COLUMNS = (
    "operation",
    "k",
    "recordsVisited",
    "recordsShifted",
    "recordsCreated",
    "recordsWritten",
    "recordsDeleted",
    "total",
)


@dataclass(frozen=True)
class CostRow:
    operation: str
    bucket_count: int
    cost: OpCost

    def values(self, weights: CostWeights | None = None) -> list[int | str]:
        c = self.cost
        row: list[int | str] = [
            self.operation,
            self.bucket_count,
            c.records_visited,
            c.records_shifted,
            c.records_created,
            c.records_written,
            c.records_deleted,
            c.total,
        ]
        if weights is not None:
            row.append(c.weighted_total(weights))
        return row


def render_cost_csv(rows: Iterable[CostRow], weights: CostWeights | None = None) -> str:
    """CSV text with a header; a trailing ``weighted`` column when weights are given."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = list(COST_CSV_COLUMNS)
    if weights is not None:
        header.append("weighted")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row.values(weights))
    return buffer.getvalue()


def bench_costs(bucket_counts: Sequence[int], seed: int, fuzz_length: int = 2_000) -> list[CostRow]:
    """Worst-case rows for every scenario, then seeded fuzz maxima, per k."""
    rows = []
    for k in bucket_counts:
        for kind in ScenarioKind:
            rows.append(CostRow(kind.value, k, measure_worst_case(k, kind).cost))
        maxima = fuzz_max_costs(k, seed, fuzz_length)
        for operation in Operation:
            if operation in maxima:
                rows.append(CostRow(f"fuzzMax:{operation.value}", k, maxima[operation]))
    return rows


TRADEOFF_CSV_COLUMNS = ("k", "bucketWidth", "maxExtraLifetime", "precisionLossPpm")


def render_tradeoff_csv(rows: Iterable[TradeoffRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TRADEOFF_CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [row.bucket_count, row.bucket_width, row.max_extra_lifetime, row.precision_loss_ppm]
        )
    return buffer.getvalue()
