"""Exception hierarchy shared by every module."""


class DetlociError(Exception):
    """Base class for all errors raised by detloci."""


class InputError(DetlociError, ValueError):
    """Malformed degree data (CLI exit code 1)."""


class UnsortedInput(InputError):
    pass


class BadLength(InputError):
    pass


class TrivialCase(InputError):
    pass


class BadAmbient(InputError):
    pass


class IndexOutOfRange(DetlociError, IndexError):
    pass


class NegativeBottom(DetlociError, ValueError):
    pass


class NotApplicable(DetlociError):
    """A formula's numerical hypothesis fails for the given degrees."""


class EmptyFamily(DetlociError):
    """The locus W(b;a) is empty (CLI exit code 2)."""


class ShapeError(DetlociError, ValueError):
    pass


class HypothesisViolated(DetlociError):
    pass


class BudgetExceeded(DetlociError, RuntimeError):
    """A Groebner computation ran past its pair-reduction budget."""


class NotCodimC(DetlociError):
    """The specialized ideal does not have the expected codimension."""
