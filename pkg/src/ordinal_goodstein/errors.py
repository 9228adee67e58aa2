"""Exception hierarchy shared by every module."""


class OrdinalError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class ArgumentOutOfRange(OrdinalError):
    pass


class NotPrincipal(OrdinalError):
    pass


class AmbiguousLocalization(OrdinalError):
    pass


class IndexOutOfDomain(OrdinalError):
    pass


class DomainError(OrdinalError):
    pass


class BadBase(OrdinalError):
    pass


class TermSyntaxError(OrdinalError, ValueError):
    pass


class NonCanonical(TermSyntaxError):
    pass


class PromotionFailure(OrdinalError):
    pass


class PathMismatch(OrdinalError):
    pass


class BudgetExhausted(Exception):
    """Raised when a step or value-size cap is hit (CLI exit code 2).

    ``partial`` carries whatever the caller had computed so far, e.g. a
    truncated Goodstein trace.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
