"""Exception hierarchy shared by every subpackage."""


class FiveVertexError(Exception):
    """Base class for all errors raised by this package."""


class ArithmeticFailure(FiveVertexError):
    """An exact-arithmetic operation could not be carried out."""


class NotDivisible(ArithmeticFailure):
    pass


class DenominatorCollapse(ArithmeticFailure):
    """A substitution sent a stored denominator factor to zero."""


class DenominatorShapeError(ArithmeticFailure):
    """A result would need a denominator outside prod(1 + beta*v)^e."""


class NotSymmetric(ArithmeticFailure):
    pass


class NoConvergence(ArithmeticFailure):
    pass


class NotInModule(FiveVertexError):
    """Polynomial exceeds the staircase exponent bound."""


class SizeMismatch(FiveVertexError):
    pass


class BadColor(FiveVertexError):
    pass


class IndexOutOfRange(FiveVertexError):
    pass


class DegenerateRoots(FiveVertexError):
    pass


class SizeGuardError(FiveVertexError):
    """A symbolic computation exceeds its configured size bound."""


class IdentityFailed(FiveVertexError):
    """A checked identity does not hold; ``witness`` pinpoints where."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class VerificationFailed(FiveVertexError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
