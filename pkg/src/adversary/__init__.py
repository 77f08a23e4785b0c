"""Adversarial deposit workloads against a victim account."""

from bucketed_balances.adversary.plan import AttackPlan, TimingStrategy
from bucketed_balances.adversary.report import ATTACK_CSV_COLUMNS, render_attack_csv, summarize
from bucketed_balances.adversary.simulator import (
    AttackReport,
    PairedReport,
    compare_with_unbounded,
    deposit_schedule,
    run_attack,
    run_trials,
)

__all__ = [
    "ATTACK_CSV_COLUMNS",
    "AttackPlan",
    "AttackReport",
    "PairedReport",
    "TimingStrategy",
    "compare_with_unbounded",
    "deposit_schedule",
    "render_attack_csv",
    "run_attack",
    "run_trials",
    "summarize",
]
