"""Exception hierarchy shared by every module."""


class HyperqError(Exception):
    pass


class MalformedGrade(HyperqError, ValueError):
    pass


class OutOfRange(HyperqError, ValueError):
    pass


class LengthMismatch(HyperqError, ValueError):
    pass


class ConstraintViolated(HyperqError, ValueError):
    """mu(x) + lambda(x) > 1 somewhere; ``element`` is the first offender (or None)."""

    def __init__(self, element=None, message=None):
        self.element = element
        if message is None:
            message = f"mu + lambda > 1 at element {element}"
        super().__init__(message)


class InvalidTable(HyperqError, ValueError):
    pass


class NotAnIfsh(HyperqError, ValueError):
    pass


class EmptySubset(HyperqError, ValueError):
    pass


class NotAHyperquasigroup(HyperqError, ValueError):
    pass


class NotASubHyperquasigroup(HyperqError, ValueError):
    pass


class OrderLimitExceeded(HyperqError, ValueError):
    pass


class ParameterOrderViolated(HyperqError, ValueError):
    pass


class ChainHypothesisViolated(HyperqError, ValueError):
    pass


class AlphaOnBoundary(HyperqError, ValueError):
    pass


class IllDefinedProduct(HyperqError):
    def __init__(self, pair, landed):
        self.pair = pair
        self.landed = landed
        super().__init__(
            f"product of classes {pair[0]} and {pair[1]} meets classes {sorted(landed)}"
        )


class NotALatinSquare(HyperqError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class ParseError(HyperqError, ValueError):
    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")
