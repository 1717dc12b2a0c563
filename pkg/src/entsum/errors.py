"""Exception types shared across the package."""


class EntsumError(Exception):
    """Base class for all entsum errors."""


class NotHermitian(EntsumError):
    """Matrix asymmetry exceeds the Hermitian tolerance."""


class NoConvergence(EntsumError):
    """Eigensolver hit the sweep cap with residual still above threshold."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NotPositiveSemidefinite(EntsumError):
    """A density-matrix spectrum has an eigenvalue below -1e-10."""


class DimensionMismatch(EntsumError):
    """Matrix or vector dimensions inconsistent with the declared qubit count."""


class ZeroVector(EntsumError):
    """A state vector with zero norm cannot be normalized."""


class LengthMismatch(EntsumError):
    """Amplitude list length is not 2**n."""


class UnknownName(EntsumError):
    """Catalog name not recognized."""


class InvalidArity(EntsumError):
    """Catalog state requested with an unsupported qubit count."""


class ParseError(EntsumError):
    """State file failed to parse; carries the offending line number."""

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line


class NormOutOfTolerance(EntsumError):
    """Raw file norm deviates from 1 by more than the allowed tolerance."""


class InvalidSubset(EntsumError):
    """Qubit subset empty, improper, or out of range."""


class InvalidM(EntsumError):
    """Subsystem size outside 1..floor(n/2)."""


class ArityMismatch(EntsumError):
    """A marker state does not have the requested qubit count."""


class InvalidConfig(EntsumError):
    """Search or sampling configuration is inconsistent."""
