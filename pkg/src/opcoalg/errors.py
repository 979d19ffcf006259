"""Exception hierarchy.

Verification failures are *not* exceptions: they are report content. The
classes here cover inputs that cannot be processed at all.
"""


class OpcoalgError(Exception):
    """Base class for every error raised by the package."""


class StructuralError(OpcoalgError, ValueError):
    """Ill-shaped data: mismatched domains, wrong table lengths, bad indices."""


class ValidationError(OpcoalgError, ValueError):
    """Well-shaped data that fails a required law (e.g. a non-associative monoid)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnsupportedStructure(OpcoalgError):
    """The requested construction needs structure the input does not have."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BoundError(OpcoalgError):
    """An object outside the instance's hard size bound was needed."""


class BudgetError(OpcoalgError):
    """An exhaustive search would exceed its combinatorial budget."""

    def __init__(self, message, attempted=None):
        super().__init__(message)
        self.attempted = attempted


class LiftFailure(OpcoalgError):
    """A factorisation that the theory guarantees does not exist.

    Raised only when a computed counterexample contradicts the expected
    result; callers that build reports catch it and record the witness.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
