"""Exception hierarchy shared across the package.

Bad inputs (violated preconditions) are kept apart from internal
consistency failures so the CLI can map them to distinct exit codes:
a precondition violation is the caller's problem, a failed cross-check
between two independent computations is a bug.
"""


class LinfactorError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(LinfactorError, ValueError):
    """An input violates a documented precondition of the operation."""


class FieldMismatchError(PreconditionError):
    """Operands belong to different fields."""


class SizeLimitError(PreconditionError):
    """An input exceeds a desk-scale guardrail (field size, coefficient
    count, or the 64-bit bound on order moduli)."""


class ParseError(PreconditionError):
    """Malformed text input; carries the source and offset for diagnostics."""

    def __init__(self, message, text=None, pos=None):
        super().__init__(message)
        self.message = message
        self.text = text
        self.pos = pos

    def caret_diagnostic(self):
        """Render the error with a caret pointing at the offending position."""
        if self.text is None or self.pos is None:
            return self.message
        return f"{self.message}\n    {self.text}\n    {' ' * self.pos}^"


class InternalCheckError(LinfactorError):
    """Two independent computations disagreed.  Not a usage error."""
