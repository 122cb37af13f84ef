"""Exception hierarchy shared by every module."""


class CodeError(ValueError):
    """Invalid input: a bad field, polynomial, matrix or code specification."""


class FieldMismatchError(CodeError):
    """Operands live in different finite fields."""


class RankDeficientError(CodeError):
    """A matrix that must have full row rank does not."""


class NotCanonicalError(CodeError):
    """A routine that needs a reduced and basic generator matrix got something else."""


class InconsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
