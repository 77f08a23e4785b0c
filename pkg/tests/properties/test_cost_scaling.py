"""Growth of operation costs with k and independence from deposit count."""

import pytest

from bucketed_balances.adversary import AttackPlan, TimingStrategy, run_attack
from bucketed_balances.config import THIRTY_DAYS, ResourceConfig
from bucketed_balances.costs import (
    Operation,
    ScenarioKind,
    assert_bound,
    complexity_slopes,
    fuzz_max_costs,
)

SLOPE_POINTS = (10, 20, 40, 80)


class TestComplexitySlopes:
    """Log-log slopes of worst-case totals over k."""

    def test_linear_operations(self):
        """Test burn, insert, prune and balance grow linearly in k."""
        slopes = complexity_slopes(
            SLOPE_POINTS,
            (ScenarioKind.BURN_ALL, ScenarioKind.INSERT_NEW, ScenarioKind.PRUNE_ALL, ScenarioKind.BALANCE),
        )
        for kind, slope in slopes.items():
            assert 0.8 <= slope <= 1.2, (kind, slope)

    def test_transfer_quadratic(self):
        """Test transfer-all grows with k squared."""
        slope = complexity_slopes(SLOPE_POINTS, (ScenarioKind.TRANSFER_ALL,))[ScenarioKind.TRANSFER_ALL]
        assert 1.6 <= slope <= 2.2


class TestDepositCountIndependence:
    """Victim costs depend on k, not on how many deposits were made."""

    @pytest.mark.parametrize("strategy", [TimingStrategy.SAME_BUCKET, TimingStrategy.SPREAD_ACROSS_BUCKETS])
    def test_fifty_versus_five_hundred(self, strategy):
        """Test burn costs match once the book is saturated or coalesced."""
        config = ResourceConfig.from_params(THIRTY_DAYS, 4)
        few = run_attack(AttackPlan(deposit_count=50, timing_strategy=strategy), config)
        many = run_attack(AttackPlan(deposit_count=500, timing_strategy=strategy), config)
        assert few.victim_burn_cost == many.victim_burn_cost
        assert few.record_count_after == many.record_count_after

    def test_same_bucket_single_record(self):
        """Test same-bucket deposits of any count give a one-record burn."""
        config = ResourceConfig.from_params(THIRTY_DAYS, 100)
        for count in (5, 500):
            report = run_attack(AttackPlan(deposit_count=count, timing_strategy=TimingStrategy.SAME_BUCKET), config)
            assert report.record_count_after == 1
            assert report.victim_burn_cost.records_visited == 1


class TestFuzzedBounds:
    """Fuzzed per-operation maxima stay within the closed-form bounds."""

    @pytest.mark.parametrize("bucket_count", [1, 2, 5, 10, 20])
    def test_fuzz(self, bucket_count):
        """Test 5 seeds of 2000 operations."""
        for seed in range(5):
            for operation, cost in fuzz_max_costs(bucket_count, seed).items():
                assert assert_bound(cost, bucket_count, operation), (seed, operation, cost)

    @pytest.mark.slow
    @pytest.mark.parametrize("bucket_count", [1, 5, 50, 100])
    def test_fuzz_full(self, bucket_count):
        """Test 50 seeds of 20 000 operations."""
        for seed in range(50):
            maxima = fuzz_max_costs(bucket_count, seed, length=20_000)
            assert Operation.INSERT in maxima
            for operation, cost in maxima.items():
                assert assert_bound(cost, bucket_count, operation), (seed, operation, cost)
