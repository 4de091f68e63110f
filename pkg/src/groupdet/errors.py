"""Exception types raised across the package."""


class GroupDetError(Exception):
    """Base class for all errors raised by groupdet."""


class NotDivisible(GroupDetError, ArithmeticError):
    pass


class MissingVariable(GroupDetError, KeyError):
    pass


class ConductorMismatch(GroupDetError, ValueError):
    pass


class SizeMismatch(GroupDetError, ValueError):
    pass


# colored permutations use the wording of their own multiplication law
ShapeMismatch = SizeMismatch


class SizeTooLarge(GroupDetError, ValueError):
    pass


class OutOfRange(GroupDetError, ValueError):
    pass


class CardinalityMismatch(GroupDetError, ValueError):
    pass


class TooLargeForSymbolic(GroupDetError, ValueError):
    """The group is above the symbolic threshold; use the modular path."""


class NonIntegerExponent(GroupDetError, ArithmeticError):
    pass


class NonIntegerResult(GroupDetError, ArithmeticError):
    pass


class InvalidDivisor(GroupDetError, ValueError):
    pass


class DegreeBoundExceeded(GroupDetError, ValueError):
    pass


class ParseError(GroupDetError, ValueError):
    pass
