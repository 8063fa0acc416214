"""Exception hierarchy shared by every heisurf module."""


class HeisurfError(Exception):
    """Base class for all library errors."""


class NonSquare(HeisurfError):
    pass


class OrderTooLarge(HeisurfError):
    pass


class RingMismatch(HeisurfError, TypeError):
    """Operands live in different polynomial rings or coefficient fields."""


class PolySyntaxError(HeisurfError, ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


class UnknownVariable(HeisurfError, KeyError):
    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"unknown variable {self.name!r}"


class UnboundVariable(HeisurfError, KeyError):
    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"variable {self.name!r} has no value"


class DegreeZero(HeisurfError, ValueError):
    pass


class ExactDivisionFailed(HeisurfError, ArithmeticError):
    pass


class ResourceLimit(HeisurfError):
    pass


class BadPrime(HeisurfError, ValueError):
    pass


class BoundExceeded(HeisurfError, ValueError):
    pass


class LambdaZero(HeisurfError, ValueError):
    pass


class FileError(HeisurfError, OSError):
    pass


class DegreeMismatch(HeisurfError, ValueError):
    pass


class UnknownFamily(HeisurfError, KeyError):
    pass
