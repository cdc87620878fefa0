"""Exception hierarchy.

Every error carries an ``exit_code`` so the CLI can map failures onto its
documented status codes without a lookup table.
"""


class ChromIdealError(Exception):
    exit_code = 1


class InvariantViolation(ChromIdealError):
    """An internal consistency check failed. Always a bug."""

    exit_code = 1


class ParseError(ChromIdealError):
    exit_code = 2

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(ChromIdealError, ValueError):
    exit_code = 3


class DomainError(PreconditionError):
    """Input is outside the domain where an operation is defined."""


class RegistryMismatchError(DomainError):
    """Two monomials or ideals live over different variable registries."""


class HintValidationError(PreconditionError):
    pass


class CoverError(PreconditionError):
    pass


class UnsupportedCaseError(ChromIdealError):
    exit_code = 4


class ResourceLimitError(ChromIdealError):
    exit_code = 5
