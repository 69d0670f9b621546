"""Exception hierarchy.

Validation problems derive from :class:`ValidationError` (a ``ValueError``),
size guards from :class:`ResourceError`.  The CLI maps the two families to
distinct exit codes.
"""


class SSPowerError(Exception):
    """Base class for all package errors."""


class ValidationError(SSPowerError, ValueError):
    pass


class ResourceError(SSPowerError):
    pass


class QuotaOutOfRange(ValidationError):
    pass


class EmptyGame(ValidationError):
    pass


class NonPositiveWeight(ValidationError):
    pass


class WeightOverflow(ValidationError):
    pass


class InvalidPermutation(ValidationError):
    pass


class InvalidTolerance(ValidationError):
    pass


class PlayerIndexRequired(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


class DegenerateInput(ValidationError):
    pass


class UnknownInstance(ValidationError):
    pass


class ParseError(ValidationError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class TooLargeForEnumeration(ResourceError):
    pass


class ResourceLimitExceeded(ResourceError):
    pass
