"""Expiration-preserving transfer between two books."""

import logging

from bucketed_balances.core.protocol import BookProtocol
from bucketed_balances.exceptions import BucketedBalanceError, SelfTransferError
from bucketed_balances.types import ConsumeResult, OpCost
from bucketed_balances.utils.validation import validate_amount

logger = logging.getLogger(__name__)


def transfer(
    sender: BookProtocol,
    recipient: BookProtocol,
    amount: int,
    now: int,
    cost: OpCost | None = None,
) -> ConsumeResult:
    """Move ``amount`` units FIFO from ``sender`` to ``recipient``.

    Each consumed (amount, expiry) pair is inserted into the recipient with its
    original expiry; nothing is re-bucketed. Either both books change or
    neither does.

    Args:
        sender: Book to consume from
        recipient: Book to insert into (a different object)
        amount: Units to move (> 0)
        now: Current time
        cost: Optional counters accumulating the consume and every insert

    Returns:
        The sender's ConsumeResult; INSUFFICIENT_BALANCE leaves both books untouched

    Raises:
        SelfTransferError: If sender and recipient are the same book
        ZeroAmountError: If amount is zero
        AmountOverflowError: If a recipient coalesce overflows (both books restored)
    """
    if sender is recipient:
        raise SelfTransferError()
    validate_amount(amount, "transfer")
    cost = cost if cost is not None else OpCost()

    sender_state = sender.snapshot()
    recipient_state = recipient.snapshot()

    result = sender.consume(amount, now, cost)
    if not result.ok:
        return result
    try:
        for part_amount, expiry in result.consumed:
            recipient.insert(part_amount, expiry, now, cost)
    except BucketedBalanceError:
        logger.debug("Transfer of %d rolled back at t=%d", amount, now)
        sender.restore(sender_state)
        recipient.restore(recipient_state)
        raise
    return result
