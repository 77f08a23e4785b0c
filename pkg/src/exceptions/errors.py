"""Custom exceptions for the library."""


class BucketedBalanceError(Exception):
    """Base exception for all library errors."""

    pass


class InvalidConfigError(BucketedBalanceError):
    """Raised when a resource configuration is invalid."""

    def __init__(self, message: str, errors: dict | None = None):
        self.errors = errors
        super().__init__(message)


class InvalidArgumentError(BucketedBalanceError):
    """Raised when an operation receives an argument it cannot accept."""

    pass


class ZeroAmountError(InvalidArgumentError):
    """Raised when a deposit, consume or transfer is asked to move zero units."""

    def __init__(self, operation: str):
        self.operation = operation
        super().__init__(f"{operation}: amount must be greater than zero")


class SelfTransferError(InvalidArgumentError):
    """Raised when sender and recipient are the same book or account."""

    def __init__(self, account: str | None = None):
        self.account = account
        target = f" for account '{account}'" if account is not None else ""
        super().__init__(f"Self-transfer is not allowed{target}")


class InvalidIdentifierError(InvalidArgumentError):
    """Raised when an account or resource identifier is empty or too long."""

    def __init__(self, kind: str, value: str, reason: str):
        self.kind = kind
        self.value = value
        super().__init__(f"Invalid {kind} identifier {value!r}: {reason}")


class MisalignedExpiryError(InvalidArgumentError):
    """Raised when an expiry is not a multiple of the bucket width."""

    def __init__(self, expiry: int, width: int):
        self.expiry = expiry
        self.width = width
        super().__init__(
            f"Expiry {expiry} is not a bucket boundary (width {width})"
        )


class StaleExpiryError(InvalidArgumentError):
    """Raised when inserting a record that is already expired."""

    def __init__(self, expiry: int, now: int):
        self.expiry = expiry
        self.now = now
        super().__init__(f"Expiry {expiry} is not after current time {now}")


class ArithmeticOverflowError(BucketedBalanceError):
    """Base exception for checked-arithmetic overflows."""

    def __init__(self, message: str, limit: int):
        self.limit = limit
        super().__init__(message)


class AmountOverflowError(ArithmeticOverflowError):
    """Raised when an amount sum exceeds the token unit range."""

    pass


class TimestampOverflowError(ArithmeticOverflowError):
    """Raised when a timestamp computation exceeds the timestamp range."""

    pass


class InsufficientBalanceError(BucketedBalanceError):
    """Raised by the ledger when an account cannot cover a burn or transfer."""

    def __init__(self, account: str, resource: str, requested: int, available: int):
        self.account = account
        self.resource = resource
        self.requested = requested
        self.available = available
        super().__init__(
            f"Insufficient balance for '{account}' on '{resource}': "
            f"requested {requested}, available {available}"
        )


class UnknownResourceError(BucketedBalanceError):
    """Raised when a resource has not been defined."""

    def __init__(self, resource: str):
        self.resource = resource
        super().__init__(f"Unknown resource '{resource}'")


class DuplicateResourceError(BucketedBalanceError):
    """Raised when a resource is defined twice."""

    def __init__(self, resource: str):
        self.resource = resource
        super().__init__(f"Resource '{resource}' is already defined")


class TimeRegressionError(BucketedBalanceError):
    """Raised when the virtual clock would move backwards."""

    def __init__(self, current: int, requested: int):
        self.current = current
        self.requested = requested
        super().__init__(
            f"Clock cannot move backwards from {current} to {requested}"
        )


class SnapshotError(BucketedBalanceError):
    """Base exception for snapshot persistence errors."""

    def __init__(self, message: str, path: str | None = None):
        self.path = path
        super().__init__(message)


class CorruptSnapshotError(SnapshotError):
    """Raised when a snapshot is missing, unparsable or violates an invariant."""

    pass


class UnsupportedSnapshotVersionError(CorruptSnapshotError):
    """Raised when a snapshot declares a format version this library cannot read."""

    def __init__(self, version: int, path: str | None = None):
        self.version = version
        super().__init__(f"Unsupported snapshot format version {version}", path)
