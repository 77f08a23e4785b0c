"""Unit tests for RecordBook and the book-level transfer."""

import pytest

from bucketed_balances.config import AMOUNT_MAX
from bucketed_balances.core import RecordBook, transfer
from bucketed_balances.exceptions import (
    AmountOverflowError,
    InvalidArgumentError,
    MisalignedExpiryError,
    SelfTransferError,
    StaleExpiryError,
    ZeroAmountError,
)
from bucketed_balances.types import ConsumeStatus, OpCost


class TestInsert:
    """Tests for RecordBook.insert."""

    def test_into_empty_book(self, make_book):
        """Test insertion into an empty book creates one record."""
        book = make_book()
        cost = OpCost()
        book.insert(10, 250, 0, cost)
        assert book.pairs() == [(10, 250)]
        assert cost == OpCost(records_created=1, records_written=1)

    def test_coalesce(self, make_book):
        """Test a deposit with an existing expiry adds to that record."""
        book = make_book((10, 250))
        cost = OpCost()
        book.insert(5, 250, 0, cost)
        assert book.pairs() == [(15, 250)]
        assert cost == OpCost(records_visited=1, records_written=1)

    def test_shift_insert_keeps_order(self, make_book):
        """Test a new expiry lands between its neighbours."""
        book = make_book((10, 250), (7, 750))
        cost = OpCost()
        book.insert(3, 500, 0, cost)
        assert book.pairs() == [(10, 250), (3, 500), (7, 750)]
        assert cost == OpCost(
            records_visited=2, records_shifted=1, records_created=1, records_written=1
        )

    def test_prunes_expired_prefix_first(self, make_book):
        """Test expired records are dropped even on the coalesce path."""
        book = make_book((10, 250), (5, 750))
        cost = OpCost()
        book.insert(3, 750, 300, cost)
        assert book.pairs() == [(8, 750)]
        assert cost.records_deleted == 1
        assert cost.records_visited == 2

    def test_zero_amount(self, make_book):
        """Test zero deposits are rejected."""
        with pytest.raises(ZeroAmountError):
            make_book().insert(0, 250, 0)

    def test_misaligned_expiry(self, make_book):
        """Test expiries off a bucket boundary are rejected."""
        with pytest.raises(MisalignedExpiryError):
            make_book().insert(1, 251, 0)

    def test_stale_expiry(self, make_book):
        """Test an expiry at or before now is rejected."""
        with pytest.raises(StaleExpiryError):
            make_book().insert(1, 250, 250)

    def test_overflow_leaves_book_unchanged(self, make_book):
        """Test coalescing past 2**128 - 1 raises without mutating."""
        book = make_book((5, 250), (AMOUNT_MAX, 500))
        with pytest.raises(AmountOverflowError):
            book.insert(1, 500, 300)
        assert book.pairs() == [(5, 250), (AMOUNT_MAX, 500)]

    def test_expiry_for(self, make_book):
        """Test the book assigns bucketed expiries."""
        assert make_book().expiry_for(100) == 1250


class TestConsume:
    """Tests for RecordBook.consume."""

    def test_fifo(self, make_book):
        """Test the earliest expiry is consumed first."""
        book = make_book((10, 250), (5, 500))
        cost = OpCost()
        result = book.consume(12, 0, cost)
        assert result.status is ConsumeStatus.SUCCESS
        assert result.consumed.parts == ((10, 250), (2, 500))
        assert result.consumed.total == 12
        assert book.pairs() == [(3, 500)]
        assert cost == OpCost(
            records_visited=2, records_shifted=1, records_written=1, records_deleted=1
        )

    def test_insufficient_leaves_book_unchanged(self, make_book):
        """Test an uncovered request is a status and mutates nothing."""
        book = make_book((5, 250))
        result = book.consume(10, 0)
        assert result.status is ConsumeStatus.INSUFFICIENT_BALANCE
        assert not result.ok
        assert len(result.consumed) == 0
        assert book.pairs() == [(5, 250)]

    def test_expired_at_boundary(self, make_book):
        """Test a record is no longer spendable at its expiry."""
        book = make_book((5, 250))
        result = book.consume(5, 250)
        assert result.status is ConsumeStatus.INSUFFICIENT_BALANCE
        assert book.pairs() == [(5, 250)]

    def test_success_drops_skipped_expired_records(self, make_book):
        """Test a successful consume also compacts the expired prefix."""
        book = make_book((10, 250), (5, 500))
        result = book.consume(5, 300)
        assert result.consumed.parts == ((5, 500),)
        assert book.pairs() == []

    def test_zero_amount(self, make_book):
        """Test zero consumes are rejected."""
        with pytest.raises(ZeroAmountError):
            make_book((5, 250)).consume(0, 0)


class TestPruneAndBalance:
    """Tests for prune and valid_balance."""

    def test_prune_expired(self, make_book):
        """Test a record expiring exactly at now is dropped."""
        book = make_book((10, 250), (5, 750))
        cost = OpCost()
        book.prune(250, cost)
        assert book.pairs() == [(5, 750)]
        assert cost == OpCost(records_visited=2, records_shifted=1, records_deleted=1)

    def test_prune_empty(self, make_book):
        """Test an empty book is a fixed point."""
        book = make_book()
        book.prune(10_000)
        assert book.pairs() == []

    def test_prune_nothing_expired(self, make_book):
        """Test prune keeps every live record."""
        book = make_book((10, 250), (5, 750))
        book.prune(100)
        assert book.pairs() == [(10, 250), (5, 750)]

    def test_prune_idempotent(self, make_book):
        """Test pruning twice at the same time changes nothing more."""
        book = make_book((10, 250), (5, 750), (1, 1000))
        book.prune(750)
        once = book.pairs()
        book.prune(750)
        assert book.pairs() == once == [(1, 1000)]

    @pytest.mark.parametrize(
        ("pairs", "now", "expected"),
        [((), 0, 0), (((10, 250), (5, 500)), 0, 15), (((10, 250), (5, 500)), 300, 5)],
    )
    def test_valid_balance(self, make_book, pairs, now, expected):
        """Test only records expiring after now count."""
        book = make_book(*pairs)
        assert book.valid_balance(now) == expected
        assert book.pairs() == list(pairs)


class TestTransfer:
    """Tests for the expiration-preserving transfer."""

    def test_partial(self, make_book):
        """Test units keep their expiry in the recipient."""
        sender, recipient = make_book((10, 250)), make_book()
        result = transfer(sender, recipient, 4, 0)
        assert result.ok
        assert sender.pairs() == [(6, 250)]
        assert recipient.pairs() == [(4, 250)]

    def test_full_drain_coalesces(self, make_book):
        """Test transferred units merge into the recipient's matching record."""
        sender, recipient = make_book((10, 250)), make_book((1, 250))
        transfer(sender, recipient, 10, 0)
        assert sender.pairs() == []
        assert recipient.pairs() == [(11, 250)]

    def test_insufficient(self, make_book):
        """Test both books stay unchanged when the sender is short."""
        sender, recipient = make_book((5, 250)), make_book()
        result = transfer(sender, recipient, 6, 0)
        assert result.status is ConsumeStatus.INSUFFICIENT_BALANCE
        assert sender.pairs() == [(5, 250)]
        assert recipient.pairs() == []

    def test_self_transfer(self, make_book):
        """Test the same book cannot be both ends."""
        book = make_book((5, 250))
        with pytest.raises(SelfTransferError):
            transfer(book, book, 1, 0)

    def test_overflow_rolls_back_both_books(self, make_book):
        """Test a recipient overflow restores sender and recipient."""
        sender = make_book((5, 250), (5, 500))
        recipient = make_book((AMOUNT_MAX, 500))
        with pytest.raises(AmountOverflowError):
            transfer(sender, recipient, 10, 0)
        assert sender.pairs() == [(5, 250), (5, 500)]
        assert recipient.pairs() == [(AMOUNT_MAX, 500)]

    def test_cost_accumulates_consume_and_inserts(self, make_book):
        """Test one counter covers the consume and every insert."""
        sender, recipient = make_book((10, 250), (5, 500)), make_book()
        cost = OpCost()
        transfer(sender, recipient, 15, 0, cost)
        assert recipient.pairs() == [(10, 250), (5, 500)]
        assert cost.records_created == 2
        assert cost.records_deleted == 2


class TestFromPairs:
    """Tests for building books from persisted pairs."""

    @pytest.mark.parametrize(
        "pairs",
        [
            [(1, 250), (1, 250)],
            [(1, 251)],
            [(0, 250)],
            [(1, 500), (1, 250)],
            [(1, 250 * i) for i in range(1, 7)],
        ],
    )
    def test_invariant_violations(self, config, pairs):
        """Test duplicates, misalignment, zero amounts, disorder and overlong books."""
        with pytest.raises(InvalidArgumentError):
            RecordBook.from_pairs(config, pairs)

    def test_copy_is_independent(self, make_book):
        """Test a copy does not share records with the original."""
        book = make_book((10, 250))
        clone = book.copy()
        clone.insert(1, 500, 0)
        assert book.pairs() == [(10, 250)]
        assert clone == RecordBook.from_pairs(book.config, [(10, 250), (1, 500)])
