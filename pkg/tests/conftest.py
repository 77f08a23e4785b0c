"""Shared fixtures."""

import pytest

from bucketed_balances.config import ResourceConfig
from bucketed_balances.core import RecordBook
from bucketed_balances.ledger import Ledger


@pytest.fixture
def config():
    """Fixture with T=1000, k=4, so buckets are 250 seconds wide."""
    return ResourceConfig.from_params(1000, 4)


@pytest.fixture
def make_book(config):
    """Fixture building a RecordBook from (amount, expiry) pairs."""

    def _make(*pairs):
        return RecordBook.from_pairs(config, pairs)

    return _make


@pytest.fixture
def ledger():
    """Fixture creating a ledger with 'credits' defined as T=1000, k=4."""
    ledger = Ledger()
    ledger.define_resource("credits", 1000, 4)
    return ledger
