"""JSON snapshot persistence of a ledger and its virtual clock."""

import json
import logging
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, StrictInt, ValidationError, field_serializer, field_validator

from bucketed_balances.config import (
    AMOUNT_MAX,
    JSON_SAFE_INTEGER_MAX,
    SNAPSHOT_FORMAT_VERSION,
    TIMESTAMP_MAX,
)
from bucketed_balances.exceptions import (
    BucketedBalanceError,
    CorruptSnapshotError,
    SnapshotError,
    UnsupportedSnapshotVersionError,
)
from bucketed_balances.ledger import Ledger
from bucketed_balances.utils.helpers import atomic_write_text, deserialize_json, serialize_json

logger = logging.getLogger(__name__)


class SnapshotRecord(BaseModel):
    """One (amount, expiresAt) record. Large amounts travel as decimal strings."""

    model_config = ConfigDict(extra="forbid")

    amount: int = Field(..., ge=1, le=AMOUNT_MAX, strict=True)
    expiresAt: StrictInt = Field(..., ge=0, le=TIMESTAMP_MAX)

    @field_validator("amount", mode="before")
    @classmethod
    def parse_amount(cls, v: Any) -> Any:
        if isinstance(v, str):
            if not v.isdigit() or not v.isascii():
                raise ValueError(f"amount string must be decimal digits, got {v!r}")
            return int(v)
        return v

    @field_serializer("amount")
    def dump_amount(self, amount: int) -> int | str:
        return str(amount) if amount > JSON_SAFE_INTEGER_MAX else amount


class SnapshotResource(BaseModel):
    model_config = ConfigDict(extra="forbid")

    resourceId: str = Field(..., description="Resource identifier")
    ttl: StrictInt = Field(..., ge=1, le=TIMESTAMP_MAX)
    bucketCount: StrictInt = Field(..., ge=1)
    bucketWidth: StrictInt = Field(..., ge=1)


class SnapshotBook(BaseModel):
    model_config = ConfigDict(extra="forbid")

    accountId: str = Field(..., description="Account identifier")
    resourceId: str = Field(..., description="Resource identifier")
    records: list[SnapshotRecord] = Field(default_factory=list)


class Snapshot(BaseModel):
    """Complete persisted state: clock, resource configs and non-empty books."""

    model_config = ConfigDict(extra="forbid")

    formatVersion: StrictInt = Field(...)
    clock: StrictInt = Field(..., ge=0, le=TIMESTAMP_MAX)
    resources: list[SnapshotResource] = Field(...)
    books: list[SnapshotBook] = Field(...)

    @classmethod
    def from_ledger(cls, ledger: Ledger) -> "Snapshot":
        """Canonical snapshot: resources sorted by id, books by (account, resource)."""
        resources = [
            SnapshotResource(
                resourceId=resource_id,
                ttl=config.ttl,
                bucketCount=config.bucket_count,
                bucketWidth=config.bucket_width,
            )
            for resource_id, config in sorted(ledger.configs.items())
        ]
        books = [
            SnapshotBook(
                accountId=account,
                resourceId=resource,
                records=[SnapshotRecord(amount=a, expiresAt=e) for a, e in book.pairs()],
            )
            for account, resource, book in ledger.books()
        ]
        return cls(
            formatVersion=SNAPSHOT_FORMAT_VERSION,
            clock=ledger.clock,
            resources=resources,
            books=books,
        )

    def to_ledger(self) -> Ledger:
        """Rebuild a ledger, checking every book invariant.

        Raises:
            BucketedBalanceError: If a resource, book or record is invalid
        """
        ledger = Ledger(clock=self.clock)
        for resource in self.resources:
            config = ledger.define_resource(resource.resourceId, resource.ttl, resource.bucketCount)
            if config.bucket_width != resource.bucketWidth:
                raise CorruptSnapshotError(
                    f"Resource '{resource.resourceId}' declares bucketWidth "
                    f"{resource.bucketWidth}, expected {config.bucket_width}"
                )
        for book in self.books:
            ledger.load_book(
                book.accountId,
                book.resourceId,
                [(r.amount, r.expiresAt) for r in book.records],
            )
        return ledger


def dump_snapshot(ledger: Ledger) -> str:
    """Canonical JSON text of a ledger; identical ledgers give identical bytes."""
    return serialize_json(Snapshot.from_ledger(ledger).model_dump(mode="json"))


def parse_snapshot(text: str, path: str | None = None) -> Ledger:
    """Parse snapshot text into a ledger.

    Raises:
        UnsupportedSnapshotVersionError: If formatVersion is not supported
        CorruptSnapshotError: If the text is not a valid snapshot
    """
    try:
        data = deserialize_json(text)
    except json.JSONDecodeError as e:
        raise CorruptSnapshotError(f"Snapshot is not valid JSON: {e}", path) from e

    if isinstance(data, dict):
        version = data.get("formatVersion")
        if isinstance(version, int) and version != SNAPSHOT_FORMAT_VERSION:
            raise UnsupportedSnapshotVersionError(version, path)

    try:
        snapshot = Snapshot.model_validate(data)
    except ValidationError as e:
        error = e.errors(include_url=False)[0]
        location = ".".join(str(part) for part in error["loc"])
        raise CorruptSnapshotError(f"Invalid snapshot at '{location}': {error['msg']}", path) from e

    try:
        return snapshot.to_ledger()
    except SnapshotError as e:
        e.path = e.path or path
        raise
    except BucketedBalanceError as e:
        raise CorruptSnapshotError(f"Snapshot violates a ledger invariant: {e}", path) from e


def load_snapshot(path: Path | str) -> Ledger:
    """Load a ledger from a snapshot file.

    No partial state is ever returned: any failure raises.

    Raises:
        UnsupportedSnapshotVersionError: If formatVersion is not supported
        CorruptSnapshotError: If the file is missing, unreadable or invalid
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError as e:
        raise CorruptSnapshotError(f"Snapshot file not found: {path}", str(path)) from e
    except (OSError, UnicodeDecodeError) as e:
        raise CorruptSnapshotError(f"Cannot read snapshot {path}: {e}", str(path)) from e
    ledger = parse_snapshot(text, str(path))
    logger.debug("Loaded snapshot %s (clock=%d)", path, ledger.clock)
    return ledger


def save_snapshot(ledger: Ledger, path: Path | str) -> None:
    """Write the canonical snapshot atomically (temp file, then rename).

    Raises:
        SnapshotError: On I/O failure; the previous file is left intact
    """
    path = Path(path)
    try:
        atomic_write_text(path, dump_snapshot(ledger))
    except OSError as e:
        raise SnapshotError(f"Cannot write snapshot {path}: {e}", str(path)) from e
    logger.debug("Saved snapshot %s (clock=%d)", path, ledger.clock)
