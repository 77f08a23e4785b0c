"""Randomized checks of the storage bound, TTL guarantee and equivalence."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bucketed_balances.config import ResourceConfig
from bucketed_balances.core import RecordBook, bucket_width, bucketed_expiry
from bucketed_balances.ledger import Ledger
from bucketed_balances.oracle import (
    ExactExpiryBook,
    apply_op,
    check_dominance,
    find_ttl_violation,
    random_trace,
    replay_differential,
)


def _assert_bounded_replay(seed, length, bucket_count):
    ttl = 1000 * bucket_count
    trace = random_trace(seed, length, ttl=ttl, bucket_count=bucket_count, max_step=ttl // bucket_count)
    ledger = Ledger()
    for op in trace:
        apply_op(ledger, op)
        for account, resource, book in ledger.books():
            assert len(book) <= bucket_count + 1, (account, resource, len(book))
            assert book.check_invariants() == [], (account, resource)


class TestStorageBound:
    """Every stored book holds at most k + 1 records."""

    @pytest.mark.parametrize("bucket_count", [1, 2, 5, 10, 100])
    def test_random_traces(self, bucket_count):
        """Test 20 seeded traces of 500 operations."""
        for seed in range(20):
            _assert_bounded_replay(seed, 500, bucket_count)

    @pytest.mark.slow
    @pytest.mark.parametrize("bucket_count", [1, 2, 5, 10, 100])
    def test_random_traces_full(self, bucket_count):
        """Test 200 seeded traces of 10 000 operations per k."""
        for seed in range(200):
            _assert_bounded_replay(seed, 10_000, bucket_count)


def _assert_expiry_window(rng, samples):
    for _ in range(samples):
        ttl = rng.randint(1, 10**9)
        bucket_count = rng.randint(1, 1000)
        deposit_time = rng.randint(0, 10**12)
        width = bucket_width(ttl, bucket_count)
        expiry = bucketed_expiry(deposit_time, ttl, width)
        assert deposit_time + ttl <= expiry < deposit_time + ttl + width
        assert expiry % width == 0


def _assert_sampled_dominance(seed, deposits, samples, bucket_count=4):
    """Interleave seeded deposits with sampled times, checking dominance at each one."""
    rng = random.Random(seed)
    config = ResourceConfig.from_params(1000, bucket_count)
    coalesced, exact = RecordBook(config), ExactExpiryBook(config)
    schedule = sorted((rng.randint(0, 5000), rng.randint(1, 50)) for _ in range(deposits))
    sample_times = sorted(rng.randint(0, 7000) for _ in range(samples))
    applied = 0
    for at in sample_times:
        while applied < len(schedule) and schedule[applied][0] <= at:
            time, amount = schedule[applied]
            coalesced.insert(amount, coalesced.expiry_for(time), time)
            exact.insert(amount, exact.expiry_for(time), time)
            applied += 1
        assert check_dominance(coalesced, exact, at), (seed, at)


class TestTtlGuarantee:
    """Units stay valid for at least T and at most T + w - 1 extra seconds."""

    def test_expiry_window(self):
        """Test 10 000 random (t, T, k) triples."""
        _assert_expiry_window(random.Random(0), 10_000)

    @pytest.mark.slow
    def test_expiry_window_full(self):
        """Test 1 000 000 random (t, T, k) triples."""
        _assert_expiry_window(random.Random(1), 1_000_000)

    @settings(max_examples=200, deadline=None)
    @given(
        steps=st.lists(
            st.tuples(st.integers(min_value=0, max_value=600), st.integers(min_value=1, max_value=100)),
            min_size=1,
            max_size=40,
        ),
        bucket_count=st.integers(min_value=1, max_value=10),
    )
    def test_record_book_never_loses_live_units(self, steps, bucket_count):
        """Test no deposit vanishes before its exact expiry."""
        config = ResourceConfig.from_params(1000, bucket_count)
        deposits, clock = [], 0
        for step, amount in steps:
            clock += step
            deposits.append((clock, amount))
        assert find_ttl_violation(RecordBook(config), deposits) is None

    @settings(max_examples=200, deadline=None)
    @given(
        deposit_times=st.lists(st.integers(min_value=0, max_value=5000), min_size=1, max_size=30),
        at=st.integers(min_value=0, max_value=8000),
    )
    def test_dominates_exact_expiry(self, deposit_times, at):
        """Test the bucketed balance is never below the exact-expiry balance."""
        config = ResourceConfig.from_params(1000, 4)
        coalesced, exact = RecordBook(config), ExactExpiryBook(config)
        for time in sorted(deposit_times):
            coalesced.insert(1, coalesced.expiry_for(time), time)
            exact.insert(1, exact.expiry_for(time), time)
        assert check_dominance(coalesced, exact, at)

    def test_dominance_is_strict_somewhere(self):
        """Test an off-boundary deposit outlives its exact expiry."""
        config = ResourceConfig.from_params(1000, 4)
        coalesced, exact = RecordBook(config), ExactExpiryBook(config)
        coalesced.insert(1, coalesced.expiry_for(1), 1)
        exact.insert(1, exact.expiry_for(1), 1)
        assert coalesced.valid_balance(1001) > exact.valid_balance(1001)

    def test_sampled_dominance(self):
        """Test 1000 sampled times over seeded deposit-only traces."""
        for seed in range(10):
            _assert_sampled_dominance(seed, deposits=200, samples=100)

    @pytest.mark.slow
    @pytest.mark.parametrize("bucket_count", [1, 4, 10, 100])
    def test_sampled_dominance_full(self, bucket_count):
        """Test 10 000 sampled times per k over seeded deposit-only traces."""
        for seed in range(10):
            _assert_sampled_dominance(seed, deposits=1000, samples=1000, bucket_count=bucket_count)


class TestEquivalence:
    """The coalesced ledger matches an uncoalesced one step by step."""

    def test_random_traces(self):
        """Test 50 traces of 1000 operations at k=5."""
        for seed in range(50):
            report = replay_differential(random_trace(seed, 1000))
            assert report, report.render()

    @pytest.mark.slow
    def test_random_traces_full(self):
        """Test 1000 traces of 1000 operations at k=5."""
        for seed in range(1000):
            report = replay_differential(random_trace(seed, 1000))
            assert report, report.render()

    def test_wide_clock_steps(self):
        """Test traces whose clock jumps past whole TTLs."""
        for seed in range(20):
            report = replay_differential(random_trace(seed, 500, max_step=3000))
            assert report, report.render()
