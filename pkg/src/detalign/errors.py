"""Exception types shared across the package.

Every error carries a ``kind`` (its class name) and a ``payload`` dict so the
CLI can emit a machine-readable error object without special-casing.
"""


class DetAlignError(Exception):
    """Base class for all package errors."""

    def __init__(self, message="", **payload):
        super().__init__(message)
        self.payload = payload

    @property
    def kind(self):
        return type(self).__name__

    def to_dict(self):
        out = {"error": self.kind, "message": str(self)}
        out.update(self.payload)
        return out


# numtheory
class ZeroDivisor(DetAlignError, ZeroDivisionError):
    pass


class SearchExhausted(DetAlignError):
    pass


class EmptyInterval(DetAlignError):
    pass


# polynomial
class PolySyntaxError(DetAlignError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}", position=position)
        self.position = position


class IndexOutOfRange(DetAlignError, IndexError):
    pass


class ZeroPolynomial(DetAlignError, ValueError):
    pass


class EvaluationOverflow(DetAlignError, OverflowError):
    pass


# codecs: derivation
class StructureViolation(DetAlignError):
    pass


class InjectivityViolation(DetAlignError):
    def __init__(self, message, pair, **extra):
        super().__init__(message, pair=list(pair), **extra)
        self.pair = tuple(pair)


class ConditionViolated(DetAlignError):
    def __init__(self, message, position):
        super().__init__(message, position=position)
        self.position = position


class CongruenceViolated(DetAlignError):
    pass


class InvalidParameter(DetAlignError, ValueError):
    pass


# codecs: decoding
class DecodeError(DetAlignError):
    """Raised by a decoder when the observation cannot be mapped to a message."""


class NoSolution(DecodeError):
    pass


class AmbiguousSolution(DecodeError):
    def __init__(self, message, solutions):
        super().__init__(message, solutions=list(solutions))
        self.solutions = tuple(solutions)


class NotDivisible(DecodeError):
    pass


class NotInImage(DecodeError):
    pass


# analysis
class BudgetExceeded(DetAlignError):
    pass
