"""Configuration models and library-wide limits."""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, StrictInt, ValidationError, model_validator

from bucketed_balances.exceptions import InvalidConfigError

# Token units are 128-bit unsigned; every addition is checked against this.
AMOUNT_MAX = 2**128 - 1
TIMESTAMP_MAX = 2**64 - 1

IDENTIFIER_MAX_BYTES = 256

THIRTY_DAYS = 30 * 86_400
DEFAULT_BUCKET_COUNT = 100

DEFAULT_ATTACK_DEPOSITS = 500
MAX_ATTACK_DEPOSITS = 10**6

SNAPSHOT_FORMAT_VERSION = 1
# Amounts above this are written as strings in snapshots.
JSON_SAFE_INTEGER_MAX = 2**53 - 1


class ResourceConfig(BaseModel):
    """TTL configuration for one resource.

    ``bucket_width`` is derived as ``ceil(ttl / bucket_count)`` and may be
    omitted on construction. When given (e.g. from a snapshot) it must match.
    """

    model_config = ConfigDict(frozen=True)

    ttl: StrictInt = Field(..., ge=1, le=TIMESTAMP_MAX, description="TTL in seconds")
    bucket_count: StrictInt = Field(..., ge=1, description="Target bucket count k")
    bucket_width: StrictInt = Field(default=0, description="Bucket width in seconds")

    @model_validator(mode="before")
    @classmethod
    def _derive_bucket_width(cls, data: Any) -> Any:
        if not isinstance(data, dict) or data.get("bucket_width") is not None:
            return data
        ttl = data.get("ttl")
        bucket_count = data.get("bucket_count")
        if isinstance(ttl, int) and isinstance(bucket_count, int) and bucket_count >= 1:
            return {**data, "bucket_width": (ttl + bucket_count - 1) // bucket_count}
        return data

    @model_validator(mode="after")
    def _check_bucket_width(self) -> "ResourceConfig":
        expected = (self.ttl + self.bucket_count - 1) // self.bucket_count
        if self.bucket_width != expected:
            raise ValueError(
                f"bucket_width must equal ceil(ttl / bucket_count) = {expected}, "
                f"got {self.bucket_width}"
            )
        return self

    @property
    def max_extra_lifetime(self) -> int:
        """Longest time a deposit can outlive ``t + ttl``."""
        return self.bucket_width - 1

    @property
    def max_records(self) -> int:
        """Storage bound per book (k + 1)."""
        return self.bucket_count + 1

    @classmethod
    def from_params(
        cls, ttl: int, bucket_count: int, bucket_width: int | None = None
    ) -> "ResourceConfig":
        """Build a config, converting validation failures to InvalidConfigError.

        Args:
            ttl: TTL in seconds (>= 1)
            bucket_count: Number of buckets k (>= 1)
            bucket_width: Optional explicit width, checked against the derived one

        Returns:
            ResourceConfig instance

        Raises:
            InvalidConfigError: If any value is out of range
        """
        try:
            return cls(ttl=ttl, bucket_count=bucket_count, bucket_width=bucket_width)
        except ValidationError as e:
            raise InvalidConfigError(
                f"Invalid resource configuration (ttl={ttl}, k={bucket_count}): "
                f"{e.errors()[0]['msg']}",
                errors={"validation": e.errors(include_url=False)},
            ) from e


class CostWeights(BaseModel):
    """Per-counter weights for the optional weighted cost column.

    Defaults follow a storage-write-heavy model where initialising a new
    slot dwarfs reading one.
    """

    model_config = ConfigDict(frozen=True)

    visited: int = Field(default=100, ge=0)
    shifted: int = Field(default=5_000, ge=0)
    created: int = Field(default=20_000, ge=0)
    written: int = Field(default=5_000, ge=0)
    deleted: int = Field(default=100, ge=0)
