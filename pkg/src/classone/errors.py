"""Exception hierarchy shared by all modules."""


class ClassOneError(Exception):
    """Base class for every error raised by this package."""


class FieldRangeError(ClassOneError, ValueError):
    """Extension degree outside 1..12."""


class FieldMismatchError(ClassOneError, ValueError):
    """Operands live in different fields."""


class FieldDomainError(ClassOneError, ArithmeticError):
    """Inverse of zero, or an embedding between incompatible fields."""


class FormParseError(ClassOneError, ValueError):
    pass


class DegreeMismatchError(ClassOneError, ValueError):
    pass


class SingularMatrixError(ClassOneError, ValueError):
    pass


class NotOnVarietyError(ClassOneError, ValueError):
    pass


class DataCorruptionError(ClassOneError, ArithmeticError):
    """Place counts came out non-integral or negative."""


class InconsistentCountsError(ClassOneError, ArithmeticError):
    """Point counts do not come from a smooth curve of the stated genus."""


class CertificateError(ClassOneError):
    """A certificate invariant failed.

    ``invariant`` names the check, ``details`` carries whatever was computed
    before the failure.
    """

    def __init__(self, invariant: str, message: str, details: dict | None = None):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant
        self.details = details or {}
