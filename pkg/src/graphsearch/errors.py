"""Exception hierarchy shared by every module."""


class GraphSearchError(Exception):
    """Base class for all library errors."""


class ParseError(GraphSearchError):
    """Malformed JSON or missing/ill-typed fields."""


class ValidationError(GraphSearchError):
    """Well-formed input that violates an instance invariant."""


class Disconnected(ValidationError):
    pass


class NotATree(ValidationError):
    pass


class InvalidTree(ValidationError):
    """A decision tree that does not respect the query/response semantics."""

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class InvalidParams(ValidationError):
    pass


class UnknownVertex(GraphSearchError):
    pass


class PreconditionViolated(GraphSearchError):
    pass


class EmptySeparator(GraphSearchError):
    pass


class NoCut(GraphSearchError):
    pass


class TooLarge(GraphSearchError):
    """Input exceeds the size limit of an exponential-time routine."""


class GuaranteeViolation(GraphSearchError):
    """A proven bound failed its runtime check; always a bug."""
