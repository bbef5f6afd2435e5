"""Exception hierarchy shared by every module."""


class PinnacleError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(PinnacleError, ValueError):
    """An argument violates an operation's precondition."""


class SizeGuardError(DomainError):
    """An exhaustive operation was asked to run beyond its size guard."""


class UnsupportedSizeError(DomainError):
    """A closed form was requested for a set it does not cover."""


class UsageError(PinnacleError, ValueError):
    """Malformed text input (bad token, bad separator)."""


class IntegrityError(PinnacleError, RuntimeError):
    """Algorithms that must agree produced different results."""
