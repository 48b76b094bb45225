"""Exception hierarchy shared by every layer of the package."""


class FrobsigError(Exception):
    """Base class for all errors raised by frobsig."""


class DivisionByZero(FrobsigError, ZeroDivisionError):
    pass


class ArityError(FrobsigError, ValueError):
    """Operands live in polynomial rings with different variable counts."""


class ExponentOverflow(FrobsigError, OverflowError):
    """An exponent left the supported range [0, 2**20]."""


class ResourceLimit(FrobsigError):
    """A configured memory/cell guard was exceeded.

    ``partial`` carries whatever was computed before the guard tripped
    (for example the rows of a Hilbert-Kunz sequence).
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class InternalError(FrobsigError):
    """An algebraic post-condition failed; indicates a bug, not bad input."""


class NotZeroDimensional(FrobsigError):
    pass


class NotSOP(FrobsigError):
    """The supplied elements do not form a system of parameters."""


class NotNested(FrobsigError):
    """A parameter ideal is not contained in the comparison ideal."""


class ParseError(FrobsigError, ValueError):
    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)
