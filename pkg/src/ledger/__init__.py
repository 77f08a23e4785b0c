"""Multi-account ledger with a virtual clock."""

from bucketed_balances.ledger.ledger import BookFactory, Ledger

__all__ = ["BookFactory", "Ledger"]
