"""Exception hierarchy.

Two families matter to the command-line front-end: ``ValidationError``
(malformed or inconsistent input, exit code 2) and ``DomainError``
(well-formed input outside an operation's domain, exit code 3).
"""


class IETLabError(Exception):
    pass


class ValidationError(IETLabError, ValueError):
    pass


class DomainError(IETLabError, ValueError):
    pass


class BadLengths(ValidationError):
    pass


class SizeMismatch(ValidationError):
    pass


class MixedField(DomainError):
    """Operands carry different radicands."""


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class NotIrrational(DomainError):
    pass


class Exhausted(DomainError):
    """A finite continued fraction has fewer quotients than requested."""


class OutOfRange(DomainError):
    pass


class TooLarge(DomainError):
    pass


class EmptySet(DomainError):
    pass


class BadEps(DomainError):
    pass


class NotThreeIntervals(DomainError):
    pass


class NotFourIntervals(DomainError):
    pass


class MalformedInput(ValidationError):
    """Unparseable JSON or a document that does not match the schema."""
