"""Exceptions shared across the package."""

__all__ = ["YhkError", "PoleError", "RankMismatchError", "ResourceLimitError"]


class YhkError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(YhkError):
    """A rational function was evaluated at a zero of its denominator."""


class RankMismatchError(YhkError):
    """Two elements with incompatible ranks (r, n) were combined."""


class ResourceLimitError(YhkError):
    """A computation exceeded a configured resource guard.

    Rewriting in the affine algebra can blow up; guards fail loudly instead
    of grinding forever.  The limit that was hit is part of the message.
    """
