"""Golden transcript tests for the command-line driver."""
