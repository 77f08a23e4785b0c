"""Multi-account, multi-resource ledger over bounded record books."""

import logging
from types import MappingProxyType
from typing import Callable, Iterable, Iterator, Mapping

from bucketed_balances.config import ResourceConfig
from bucketed_balances.core import BookProtocol, RecordBook
from bucketed_balances.core import transfer as transfer_books
from bucketed_balances.exceptions import (
    DuplicateResourceError,
    InsufficientBalanceError,
    InvalidArgumentError,
    SelfTransferError,
    TimeRegressionError,
    UnknownResourceError,
)
from bucketed_balances.types import OpCost
from bucketed_balances.utils.arithmetic import checked_add_amount
from bucketed_balances.utils.validation import (
    validate_amount,
    validate_identifier,
    validate_timestamp,
)

logger = logging.getLogger(__name__)

BookFactory = Callable[[ResourceConfig], BookProtocol]
BookKey = tuple[str, str]


class Ledger:
    """Books keyed by (account, resource) plus a monotonic virtual clock.

    Books are created on first deposit and dropped as soon as they hold no
    records. Expired records are only pruned by deposits, consumption and
    explicit ``prune`` calls, never by advancing the clock.
    """

    def __init__(self, book_factory: BookFactory = RecordBook, clock: int = 0):
        """Initialize an empty ledger.

        Args:
            book_factory: Callable building an empty book for a resource config;
                the oracle ledgers pass their unbounded book types here
            clock: Initial virtual time
        """
        self._book_factory = book_factory
        self._clock = validate_timestamp(clock, "clock")
        self._configs: dict[str, ResourceConfig] = {}
        self._books: dict[BookKey, BookProtocol] = {}

    @property
    def clock(self) -> int:
        return self._clock

    @property
    def configs(self) -> Mapping[str, ResourceConfig]:
        return MappingProxyType(self._configs)

    def books(self) -> Iterator[tuple[str, str, BookProtocol]]:
        """Stored books as (account, resource, book), sorted by key."""
        for (account, resource) in sorted(self._books):
            yield account, resource, self._books[(account, resource)]

    def copy(self) -> "Ledger":
        clone = Ledger(self._book_factory, self._clock)
        clone._configs = dict(self._configs)
        clone._books = {key: book.copy() for key, book in self._books.items()}
        return clone

    def config_for(self, resource: str) -> ResourceConfig:
        """Configuration of a defined resource.

        Raises:
            UnknownResourceError: If the resource was never defined
        """
        try:
            return self._configs[resource]
        except KeyError:
            raise UnknownResourceError(resource) from None

    def define_resource(self, resource: str, ttl: int, bucket_count: int) -> ResourceConfig:
        """Register a resource with its TTL and bucket count.

        Raises:
            InvalidIdentifierError: If the id is empty or too long
            DuplicateResourceError: If already defined
            InvalidConfigError: If ttl or bucket_count is invalid
        """
        validate_identifier(resource, "resource")
        if resource in self._configs:
            raise DuplicateResourceError(resource)
        config = ResourceConfig.from_params(ttl, bucket_count)
        self._configs[resource] = config
        logger.info(
            "Defined resource '%s' (ttl=%d, k=%d, width=%d)",
            resource,
            config.ttl,
            config.bucket_count,
            config.bucket_width,
        )
        return config

    def advance_clock(self, to: int) -> None:
        """Move the virtual clock forward (or keep it).

        Raises:
            TimeRegressionError: If ``to`` is before the current clock
        """
        validate_timestamp(to, "clock")
        if to < self._clock:
            raise TimeRegressionError(self._clock, to)
        self._clock = to

    def mint(self, account: str, resource: str, amount: int) -> OpCost:
        """Deposit ``amount`` units expiring at the bucketed expiry of the clock.

        Returns:
            Cost counters of the insert

        Raises:
            UnknownResourceError, ZeroAmountError, AmountOverflowError
        """
        key = self._key(account, resource)
        config = self.config_for(resource)
        validate_amount(amount, "mint")
        cost = OpCost()
        book = self._books.get(key)
        created = book is None
        if created:
            book = self._book_factory(config)
        expiry = book.expiry_for(self._clock)
        book.insert(amount, expiry, self._clock, cost)
        if created:
            self._books[key] = book
        logger.debug("mint %s/%s %d -> expiry %d", account, resource, amount, expiry)
        return cost

    def burn(self, account: str, resource: str, amount: int) -> OpCost:
        """Consume ``amount`` units FIFO from the account at the current clock.

        Raises:
            UnknownResourceError, ZeroAmountError
            InsufficientBalanceError: If the valid balance is too small (nothing changes)
        """
        key = self._key(account, resource)
        self.config_for(resource)
        validate_amount(amount, "burn")
        cost = OpCost()
        book = self._books.get(key)
        if book is None:
            raise InsufficientBalanceError(account, resource, amount, 0)
        result = book.consume(amount, self._clock, cost)
        if not result.ok:
            raise InsufficientBalanceError(
                account, resource, amount, book.valid_balance(self._clock)
            )
        self._discard_if_empty(key)
        logger.debug("burn %s/%s %d", account, resource, amount)
        return cost

    def transfer(self, from_account: str, to_account: str, resource: str, amount: int) -> OpCost:
        """Move units between accounts, preserving their expirations.

        Raises:
            SelfTransferError: If both accounts are the same
            UnknownResourceError, ZeroAmountError, AmountOverflowError
            InsufficientBalanceError: If the sender cannot cover ``amount`` (nothing changes)
        """
        sender_key = self._key(from_account, resource)
        recipient_key = self._key(to_account, resource)
        if from_account == to_account:
            raise SelfTransferError(from_account)
        config = self.config_for(resource)
        validate_amount(amount, "transfer")
        cost = OpCost()
        sender = self._books.get(sender_key)
        if sender is None:
            raise InsufficientBalanceError(from_account, resource, amount, 0)
        recipient = self._books.get(recipient_key)
        created = recipient is None
        if created:
            recipient = self._book_factory(config)

        result = transfer_books(sender, recipient, amount, self._clock, cost)
        if not result.ok:
            raise InsufficientBalanceError(
                from_account, resource, amount, sender.valid_balance(self._clock)
            )
        if created and len(recipient):
            self._books[recipient_key] = recipient
        self._discard_if_empty(sender_key)
        logger.debug("transfer %s -> %s on %s: %d", from_account, to_account, resource, amount)
        return cost

    def balance_of(self, account: str, resource: str, cost: OpCost | None = None) -> int:
        """Valid balance at the current clock; 0 for accounts without a book. Pure."""
        key = self._key(account, resource)
        self.config_for(resource)
        book = self._books.get(key)
        if book is None:
            return 0
        return book.valid_balance(self._clock, cost)

    def records_of(self, account: str, resource: str) -> list[tuple[int, int]]:
        """The account's (amount, expires_at) pairs in book order, without mutation."""
        key = self._key(account, resource)
        self.config_for(resource)
        book = self._books.get(key)
        return book.pairs() if book is not None else []

    def record_count(self, account: str, resource: str) -> int:
        book = self._books.get(self._key(account, resource))
        return len(book) if book is not None else 0

    def max_record_count(self) -> int:
        """Length of the longest stored book (0 when there are none)."""
        return max((len(book) for book in self._books.values()), default=0)

    def prune(self, account: str, resource: str) -> OpCost:
        """Drop the account's expired records at the current clock."""
        key = self._key(account, resource)
        self.config_for(resource)
        cost = OpCost()
        book = self._books.get(key)
        if book is not None:
            book.prune(self._clock, cost)
            self._discard_if_empty(key)
        return cost

    def total_supply(self, resource: str) -> int:
        """Sum of valid balances of every account for one resource."""
        self.config_for(resource)
        total = 0
        for (_, book_resource), book in self._books.items():
            if book_resource == resource:
                total = checked_add_amount(total, book.valid_balance(self._clock))
        return total

    def load_book(self, account: str, resource: str, pairs: Iterable[tuple[int, int]]) -> None:
        """Install a pre-built book, checking every book invariant.

        Used when restoring persisted state.

        Raises:
            UnknownResourceError: If the resource is not defined
            InvalidArgumentError: If the pairs violate the book invariants or
                the book is empty or already present
        """
        key = self._key(account, resource)
        config = self.config_for(resource)
        if key in self._books:
            raise InvalidArgumentError(f"Duplicate book for '{account}' on '{resource}'")
        factory = getattr(self._book_factory, "from_pairs", None)
        if factory is None:
            raise InvalidArgumentError("Book type cannot be restored from pairs")
        book = factory(config, pairs)
        if not len(book):
            raise InvalidArgumentError(f"Empty book for '{account}' on '{resource}'")
        self._books[key] = book

    def _key(self, account: str, resource: str) -> BookKey:
        return (validate_identifier(account, "account"), validate_identifier(resource, "resource"))

    def _discard_if_empty(self, key: BookKey) -> None:
        book = self._books.get(key)
        if book is not None and not len(book):
            del self._books[key]
