"""Exception hierarchy shared across the engine."""


class EngineError(Exception):
    """Base class for all errors raised by this package."""


class ZeroPolynomial(EngineError):
    """An operation that needs a nonzero polynomial received zero."""


class DivisionByZero(EngineError):
    pass


class NotDivisible(EngineError):
    """Exact division failed; carries the nonzero remainder."""

    def __init__(self, remainder, message="division is not exact"):
        super().__init__(message)
        self.remainder = remainder


class NegativeInput(EngineError):
    pass


class OutOfRange(EngineError):
    pass


class DiagramTooLarge(EngineError):
    pass


class IndexOutOfRange(EngineError):
    pass


class RadicalResidue(EngineError):
    """A formal square root survived where the construction requires it to cancel."""


class NotPolynomial(EngineError):
    """A rational function expected to clear its denominator did not."""


class NoCanonicalUnit(EngineError):
    """No monomial unit makes the polynomial satisfy the framing conventions."""


class RepCapExceeded(EngineError):
    pass


class NotPalindromic(EngineError):
    pass


class OddPower(EngineError):
    """The q^2-span of an Alexander polynomial is odd; the defect formula does not apply."""


class NonzeroDefect(EngineError):
    pass


class InexactDivision(EngineError):
    """The differential expansion failed to divide exactly at some level."""

    def __init__(self, level, remainder):
        super().__init__(f"differential expansion division failed at r={level}")
        self.level = level
        self.remainder = remainder


class CorruptStore(EngineError):
    pass


class StoreUnwritable(EngineError):
    pass


class ParseError(EngineError):
    pass
