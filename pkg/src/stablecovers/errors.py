"""Exception hierarchy.

Errors split into two families: ``UsageError`` for malformed input
(bad literals, unsupported field specs) and ``DomainError`` for
well-formed input that violates a mathematical precondition. The CLI
maps the first to exit code 1 and the second to exit code 2.
"""


class StableCoversError(Exception):
    """Base class for every error raised by this package."""


class UsageError(StableCoversError):
    pass


class DomainError(StableCoversError):
    pass


class ParseError(UsageError, ValueError):
    pass


# field-core

class CompositeCharacteristic(UsageError, ValueError):
    pass


class UnsupportedDegree(UsageError, ValueError):
    pass


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class FieldMismatch(DomainError, TypeError):
    pass


class WrongCharacteristic(DomainError, ValueError):
    pass


class IndeterminatePoint(DomainError, ValueError):
    pass


# curve-graph / stable-map

class GraphError(DomainError, ValueError):
    """A dual graph or map failed validation.

    ``violations`` holds every problem found, not just the first one.
    """

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class Disconnected(GraphError):
    pass


class DuplicateMarking(GraphError):
    pass


class DanglingReference(GraphError):
    pass


class MalformedGraph(GraphError):
    pass


class ContractedWithDegree(GraphError):
    pass


class NonAdjacentImage(GraphError):
    pass


class LegMismatch(GraphError):
    pass


class BadBehavior(GraphError):
    pass


class GenusMismatch(GraphError):
    pass


class ParityError(DomainError, ValueError):
    pass


class NegativeGenus(DomainError, ValueError):
    pass


# hurwitz-count / elliptic-ff

class ScaleCap(DomainError, ValueError):
    pass


# legendre / elliptic-ff

class DegenerateLambda(DomainError, ValueError):
    pass


class NotSingular(DomainError, ValueError):
    pass


class SingularCurve(DomainError, ValueError):
    pass


# h24-classifier

class NotOnFiber(DomainError, ValueError):
    pass
