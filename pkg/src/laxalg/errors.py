"""Exception hierarchy shared by all laxalg modules."""


class LaxalgError(Exception):
    """Base class for all errors raised by this package."""


class SizeMismatch(LaxalgError):
    """Operands have incompatible matrix or series dimensions."""


class InsufficientPrecision(LaxalgError):
    """A requested coefficient lies beyond the guaranteed truncation order."""


class MalformedInput(LaxalgError):
    """Input violates a structural requirement (e.g. coefficient outside the algebra)."""


class UnsupportedFamily(LaxalgError):
    """Operation is only defined for a subset of the matrix families."""


class DegenerateConfiguration(LaxalgError):
    """Constraint system at the marked points has unexpected rank for this data."""

    def __init__(self, message, observed_dim=None):
        super().__init__(message)
        self.observed_dim = observed_dim


class WindowTooSmall(LaxalgError):
    """Decomposition window does not contain all homogeneous components."""


class NoConnectionFound(LaxalgError):
    """No admissible connection form within the allowed pole orders."""


class RegularityViolation(LaxalgError):
    """Cocycle integrand has a nonzero residue at a weak singularity."""


class ParseError(LaxalgError):
    """Configuration or number literal could not be parsed."""


class ValidationError(LaxalgError):
    """Parsed configuration violates a semantic invariant."""
