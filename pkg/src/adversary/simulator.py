"""Adversarial deposit simulation against a victim account."""

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Sequence

from bucketed_balances.adversary.plan import AttackPlan, TimingStrategy
from bucketed_balances.config import ResourceConfig
from bucketed_balances.core import RecordBook
from bucketed_balances.ledger import BookFactory, Ledger
from bucketed_balances.oracle.books import NaiveBucketedBook
from bucketed_balances.types import OpCost

logger = logging.getLogger(__name__)

RESOURCE = "credits"
SINK = "sink"
ATTACKER_SPAN_TTLS = 2


@dataclass(frozen=True)
class AttackReport:
    """Victim state and costs after one attack run."""

    model: str
    strategy: TimingStrategy
    bucket_count: int
    seed: int
    attack_deposits: int
    record_count_before: int
    record_count_after: int
    bound: int
    victim_burn_cost: OpCost
    victim_transfer_cost: OpCost
    final_clock: int

    @property
    def within_bound(self) -> bool:
        return self.record_count_after <= self.bound


@dataclass(frozen=True)
class PairedReport:
    """The same attack against the coalesced and the unbounded book."""

    coalesced: AttackReport
    unbounded: AttackReport


def deposit_schedule(plan: AttackPlan, config: ResourceConfig, seed: int) -> list[int]:
    """Non-decreasing deposit times for a plan.

    Random times are drawn over two TTLs after the start and sorted, so the
    clock never has to move backwards.
    """
    start = plan.start_time
    n = plan.deposit_count
    if plan.timing_strategy is TimingStrategy.SAME_BUCKET:
        return [start] * n
    if plan.timing_strategy is TimingStrategy.SPREAD_ACROSS_BUCKETS:
        return [start + i * config.bucket_width for i in range(n)]
    rng = random.Random(seed)
    span = ATTACKER_SPAN_TTLS * config.ttl
    return sorted(start + rng.randint(0, span) for _ in range(n))


def _drain_cost(ledger: Ledger, victim: str, transfer: bool) -> OpCost:
    scratch = ledger.copy()
    balance = scratch.balance_of(victim, RESOURCE)
    if not balance:
        return OpCost()
    if transfer:
        sink = SINK if victim != SINK else f"{SINK}-0"
        return scratch.transfer(victim, sink, RESOURCE, balance)
    return scratch.burn(victim, RESOURCE, balance)


def _simulate(
    plan: AttackPlan,
    config: ResourceConfig,
    seed: int,
    book_factory: BookFactory,
    model: str,
) -> AttackReport:
    victim = plan.target_account
    ledger = Ledger(book_factory, clock=plan.start_time)
    ledger.define_resource(RESOURCE, config.ttl, config.bucket_count)
    if plan.victim_initial_balance:
        ledger.mint(victim, RESOURCE, plan.victim_initial_balance)
    before = ledger.record_count(victim, RESOURCE)

    for t in deposit_schedule(plan, config, seed):
        ledger.advance_clock(t)
        ledger.mint(victim, RESOURCE, plan.amount_per_deposit)

    report = AttackReport(
        model=model,
        strategy=plan.timing_strategy,
        bucket_count=config.bucket_count,
        seed=seed,
        attack_deposits=plan.deposit_count,
        record_count_before=before,
        record_count_after=ledger.record_count(victim, RESOURCE),
        bound=config.max_records,
        victim_burn_cost=_drain_cost(ledger, victim, transfer=False),
        victim_transfer_cost=_drain_cost(ledger, victim, transfer=True),
        final_clock=ledger.clock,
    )
    logger.info(
        "%s attack (%s, %d deposits, k=%d, seed=%d): %d -> %d records",
        model,
        plan.timing_strategy.value,
        plan.deposit_count,
        config.bucket_count,
        seed,
        before,
        report.record_count_after,
    )
    return report


def run_attack(plan: AttackPlan, config: ResourceConfig, seed: int = 0) -> AttackReport:
    """Run an attack against a fresh coalescing ledger.

    Burn-all and transfer-all costs are measured on copies of the final
    ledger, so each starts from the same post-attack state. The run is
    deterministic for a given (plan, config, seed).
    """
    return _simulate(plan, config, seed, RecordBook, "coalesced")


def compare_with_unbounded(plan: AttackPlan, config: ResourceConfig, seed: int = 0) -> PairedReport:
    """Run the same attack against the coalesced book and the append-only array."""
    unbounded = partial(NaiveBucketedBook, prune_on_insert=False)
    return PairedReport(
        coalesced=run_attack(plan, config, seed),
        unbounded=_simulate(plan, config, seed, unbounded, "unbounded"),
    )


def run_trials(
    plan: AttackPlan,
    config: ResourceConfig,
    seeds: Sequence[int],
    max_workers: int | None = None,
) -> list[AttackReport]:
    """Independent trials, one ledger each, merged in seed order.

    Args:
        plan: Attack plan shared by all trials
        config: Resource configuration
        seeds: One seed per trial
        max_workers: Process pool size; 1 runs the trials inline
    """
    if max_workers == 1 or len(seeds) <= 1:
        return [run_attack(plan, config, seed) for seed in seeds]
    with ProcessPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(run_attack, [plan] * len(seeds), [config] * len(seeds), seeds))
