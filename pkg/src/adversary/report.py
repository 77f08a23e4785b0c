"""CSV and text rendering of attack reports."""

import csv
import io
from typing import Iterable

from bucketed_balances.adversary.simulator import AttackReport, PairedReport

ATTACK_CSV_COLUMNS = (
    "model",
    "strategy",
    "deposits",
    "k",
    "seed",
    "recordsBefore",
    "recordsAfter",
    "bound",
    "burnVisited",
    "burnTotal",
    "transferVisited",
    "transferTotal",
)


def _row(report: AttackReport) -> list[int | str]:
    return [
        report.model,
        report.strategy.value,
        report.attack_deposits,
        report.bucket_count,
        report.seed,
        report.record_count_before,
        report.record_count_after,
        report.bound,
        report.victim_burn_cost.records_visited,
        report.victim_burn_cost.total,
        report.victim_transfer_cost.records_visited,
        report.victim_transfer_cost.total,
    ]


def render_attack_csv(reports: Iterable[AttackReport | PairedReport]) -> str:
    """CSV with one row per report; paired reports contribute both models."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(ATTACK_CSV_COLUMNS)
    for report in reports:
        if isinstance(report, PairedReport):
            writer.writerow(_row(report.coalesced))
            writer.writerow(_row(report.unbounded))
        else:
            writer.writerow(_row(report))
    return buffer.getvalue()


def summarize(report: AttackReport | PairedReport) -> str:
    """Human-readable summary for stderr."""
    if isinstance(report, PairedReport):
        c, u = report.coalesced, report.unbounded
        return (
            f"{c.attack_deposits} {c.strategy.value} deposits at k={c.bucket_count}: "
            f"coalesced book holds {c.record_count_after} records (bound {c.bound}), "
            f"unbounded array holds {u.record_count_after}.\n"
            f"Victim burn-all visits {c.victim_burn_cost.records_visited} records "
            f"vs {u.victim_burn_cost.records_visited} without coalescing.\n"
        )
    verdict = "within" if report.within_bound else "EXCEEDS"
    return (
        f"{report.attack_deposits} {report.strategy.value} deposits at k={report.bucket_count}: "
        f"{report.record_count_before} -> {report.record_count_after} records, "
        f"{verdict} bound {report.bound}.\n"
    )
