"""Unit tests for bucketed_balances."""
