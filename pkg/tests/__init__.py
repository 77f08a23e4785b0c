"""Tests for bucketed_balances."""
