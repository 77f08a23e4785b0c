"""Attack plan model."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator

from bucketed_balances.config import AMOUNT_MAX, MAX_ATTACK_DEPOSITS
from bucketed_balances.exceptions import InvalidIdentifierError
from bucketed_balances.utils.validation import validate_identifier


class TimingStrategy(str, Enum):
    """How the attacker spaces its deposits in time."""

    SAME_BUCKET = "sameBucket"
    SPREAD_ACROSS_BUCKETS = "spreadAcrossBuckets"
    RANDOM_TIMES = "randomTimes"


class AttackPlan(BaseModel):
    """Adversarial deposit workload against one target account."""

    model_config = ConfigDict(frozen=True)

    deposit_count: int = Field(..., ge=1, le=MAX_ATTACK_DEPOSITS, description="Number of deposits")
    amount_per_deposit: int = Field(default=1, ge=1, le=AMOUNT_MAX, description="Units per deposit")
    timing_strategy: TimingStrategy = Field(
        default=TimingStrategy.SPREAD_ACROSS_BUCKETS, description="Deposit timing"
    )
    target_account: str = Field(default="victim", description="Victim account id")
    victim_initial_balance: int = Field(
        default=0, ge=0, le=AMOUNT_MAX, description="Units the victim holds before the attack"
    )
    start_time: int = Field(default=0, ge=0, description="Clock value when the attack starts")

    @field_validator("target_account")
    @classmethod
    def validate_target(cls, v: str) -> str:
        """Validate the target account identifier."""
        try:
            return validate_identifier(v, "account")
        except InvalidIdentifierError as e:
            raise ValueError(str(e)) from e
