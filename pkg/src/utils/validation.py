"""Validation utilities."""

from bucketed_balances.config import AMOUNT_MAX, IDENTIFIER_MAX_BYTES, TIMESTAMP_MAX
from bucketed_balances.exceptions import InvalidArgumentError, InvalidIdentifierError, ZeroAmountError


def validate_identifier(value: str, kind: str) -> str:
    """Check an account or resource identifier.

    Args:
        value: Identifier to check
        kind: "account" or "resource", used in the error message

    Returns:
        The identifier unchanged

    Raises:
        InvalidIdentifierError: If empty, not a string, not encodable as UTF-8
            or longer than 256 UTF-8 bytes
    """
    if not isinstance(value, str):
        raise InvalidIdentifierError(kind, str(value), "must be a string")
    if not value:
        raise InvalidIdentifierError(kind, value, "must not be empty")
    try:
        encoded = value.encode("utf-8")
    except UnicodeEncodeError:
        raise InvalidIdentifierError(kind, value, "is not valid UTF-8") from None
    if len(encoded) > IDENTIFIER_MAX_BYTES:
        raise InvalidIdentifierError(kind, value, f"exceeds {IDENTIFIER_MAX_BYTES} bytes")
    return value


def validate_amount(amount: int, operation: str) -> int:
    """Check that an amount is a positive 128-bit integer.

    Raises:
        ZeroAmountError: If amount is zero
        InvalidArgumentError: If amount is negative, too large or not an int
    """
    if isinstance(amount, bool) or not isinstance(amount, int):
        raise InvalidArgumentError(f"{operation}: amount must be an integer, got {amount!r}")
    if amount == 0:
        raise ZeroAmountError(operation)
    if amount < 0 or amount > AMOUNT_MAX:
        raise InvalidArgumentError(f"{operation}: amount {amount} outside [1, 2**128 - 1]")
    return amount


def validate_timestamp(value: int, name: str = "timestamp") -> int:
    """Check that a timestamp is an integer in [0, 2**64 - 1].

    Raises:
        InvalidArgumentError: If out of range or not an int
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidArgumentError(f"{name} must be an integer, got {value!r}")
    if value < 0 or value > TIMESTAMP_MAX:
        raise InvalidArgumentError(f"{name} {value} outside [0, 2**64 - 1]")
    return value
