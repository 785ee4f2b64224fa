"""
Error types shared by every matroid operation.

Precondition violations raise MatroidInputError; searches that would exceed
the bitmask kernels raise CapacityError. The CLI maps them to exit codes 2
and 3.
"""


class MatroidError(Exception):
    """Base class for all matroid toolkit errors."""


class MatroidInputError(MatroidError, ValueError):
    """An argument violates an operation's precondition."""


class CapacityError(MatroidError, RuntimeError):
    """The ground set is too large for an exhaustive search."""


# ==================== CAPACITY LIMITS ====================

SEARCH_CAPACITY = 24
"""Largest ground set for subset searches (2^24 bitmask scans)."""

CONSTRUCTION_CAPACITY = 64
"""Largest ground set for pure constructions."""

CANONICAL_CAPACITY = 12
FLATS_CAPACITY = 9
ENUMERATION_CAPACITY = 8
NAIVE_CAPACITY = 6


def require_capacity(n: int, limit: int, what: str) -> None:
    """
    Raise CapacityError if a ground set of size n exceeds limit.

    Args:
        n: Ground-set size
        limit: Largest size the operation supports
        what: Operation name for the message
    """
    if n > limit:
        raise CapacityError(f"{what} supports at most {limit} elements, got {n}")
