"""Exception types shared across the package."""


class CodeError(Exception):
    """Base class for every error raised by dpcodes."""


class NotPrimePower(CodeError, ValueError):
    pass


class DivisionByZero(CodeError, ZeroDivisionError):
    pass


class LengthMismatch(CodeError, ValueError):
    pass


class TooFewWords(CodeError, ValueError):
    pass


class EmptySet(CodeError, ValueError):
    pass


class NotOA(CodeError, ValueError):
    """Raised by oa_verify; carries the first violating projection."""

    def __init__(self, message, columns=None, tuple_=None):
        super().__init__(message)
        self.columns = columns
        self.tuple = tuple_


class ParamsInfeasible(CodeError, ValueError):
    pass


class ParamsOutOfRange(CodeError, ValueError):
    pass


class KernelDimensionError(CodeError, ArithmeticError):
    pass


class DerivationUndefined(CodeError, ValueError):
    pass


class NotFullWeight(CodeError, ValueError):
    pass


class ShapeMismatch(CodeError, ValueError):
    pass


class PreconditionViolated(CodeError, ValueError):
    pass


class Unclassifiable(CodeError, ValueError):
    pass


class ParseError(CodeError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvariantViolation(CodeError, ValueError):
    pass
