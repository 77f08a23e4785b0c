"""Randomized and property-based tests for bucketed_balances."""
