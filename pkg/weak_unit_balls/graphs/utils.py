"""Utility functions for the "graphs" app."""

import logging
import math

import environ

from .constants import DEFAULT_EXACT_DECOMPOSITION_BOUND
from .constants import DEFAULT_GIRTH4_CANDIDATE_BOUND
from .constants import DEFAULT_HARD_LABELING_EDGE_BOUND
from .constants import DEFAULT_WORK_BOUND_BITS
from .exceptions import WorkBoundExceededError

env = environ.Env()
WORK_BOUND_BITS = env.int("WEAKREP_WORK_BOUND", default=DEFAULT_WORK_BOUND_BITS)
HARD_LABELING_EDGE_BOUND = env.int(
    "WEAKREP_HARD_LABELING_EDGE_BOUND",
    default=DEFAULT_HARD_LABELING_EDGE_BOUND,
)
EXACT_DECOMPOSITION_BOUND = env.int(
    "WEAKREP_EXACT_DECOMPOSITION_BOUND",
    default=DEFAULT_EXACT_DECOMPOSITION_BOUND,
)
GIRTH4_CANDIDATE_BOUND = env.int(
    "WEAKREP_GIRTH4_CANDIDATE_BOUND",
    default=DEFAULT_GIRTH4_CANDIDATE_BOUND,
)

logger = logging.getLogger(__name__)


def search_space_bits(dimensions: int, choices: int) -> float:
    """Return log2 of ``choices`` ** ``dimensions``.

    Args:
        dimensions (int): Number of independent choices.
        choices (int): Options per choice.

    Returns:
        float: The size of the search space in bits.
    """
    if dimensions <= 0 or choices <= 1:
        return 0.0
    return dimensions * math.log2(choices)


def ensure_within_work_bound(
    bits: float,
    description: str,
    *,
    work_bound: int = WORK_BOUND_BITS,
) -> None:
    """Refuse an exhaustive search whose raw size exceeds the work bound.

    Args:
        bits (float): log2 of the search space size.
        description (str): What is being searched, for the error message.
        work_bound (int): Largest permitted search space in bits.

    Raises:
        WorkBoundExceededError: If ``bits`` is above ``work_bound``.
    """
    if bits > work_bound:
        msg = (
            f"{description}: search space of {bits:.1f} bits exceeds the work bound "
            f"of {work_bound} bits (set WEAKREP_WORK_BOUND to raise it)"
        )
        raise WorkBoundExceededError(msg)
    logger.debug("%s: searching %.1f bits of %d allowed", description, bits, work_bound)
