"""Exception hierarchy shared by the core modules, services and commands.

Each class carries the exit code the command-line interface maps it to.
"""

from collections.abc import Mapping


class SdsError(Exception):
    """Base class for all toolkit errors."""

    exit_code: int = 1

    def __init__(self, message: str, witness: Mapping[str, object] | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.witness: dict[str, object] = dict(witness or {})

    def __str__(self) -> str:
        if not self.witness:
            return self.message
        details = ", ".join(f"{k}={v}" for k, v in self.witness.items())
        return f"{self.message} ({details})"


class VerificationError(SdsError):
    """The element is not a design of the requested kind."""

    exit_code = 1


class StrictnessError(VerificationError):
    """A coefficient lies outside {-1, 0, 1} where a signed set was required."""


class DocumentError(SdsError):
    """Invalid command-line input or unparseable document."""

    exit_code = 2


class SupportOverlapError(DocumentError):
    """An element was listed with both signs."""


class PreconditionError(SdsError):
    """A construction or operation was asked for outside its domain."""

    exit_code = 3


class FieldError(PreconditionError):
    """Invalid finite field parameters or field operation."""


class GroupError(PreconditionError):
    """Group mismatch or invalid group presentation."""


class ConstructionError(PreconditionError):
    """A construction precondition does not hold."""


class CyclotomyError(PreconditionError):
    """Invalid cyclotomic system or inconsistent quartic parameters."""


class SequenceError(PreconditionError):
    """Invalid sequence or weighing-matrix request."""


class InternalDefectError(SdsError):
    """A construction that must succeed failed its own re-verification."""

    exit_code = 4


class ClassificationDisagreement(SdsError):
    """A closed-form prediction disagrees with brute-force verification."""

    exit_code = 5
