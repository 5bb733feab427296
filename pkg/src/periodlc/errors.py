"""Exception hierarchy shared by every module."""


class LinearComplexityError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(LinearComplexityError, ValueError):
    """Bad arguments: mixed fields, non-prime moduli, wrong shapes for an algorithm."""


class ShapeError(UsageError):
    """The period does not factor as q**n * p**m."""


class PreconditionError(UsageError):
    """The period factors correctly but q is not a primitive root where required."""


class InternalError(LinearComplexityError, RuntimeError):
    """An algorithm invariant was violated; indicates a bug, not bad input."""


class ContractViolation(InternalError):
    """A helper was called while its precondition did not hold."""
