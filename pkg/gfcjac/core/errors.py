"""
Exception hierarchy for GFC-Jac.

Bad input raises subclasses of ValueError; failed computations raise
subclasses of RuntimeError.
"""


class GFCError(Exception):
    """Base class for every error raised by gfcjac."""


class InputError(GFCError, ValueError):
    """Malformed or degenerate input."""


class UnsupportedModeError(InputError):
    """Operation not available for this arithmetic mode or group type."""


class MixedFieldError(InputError):
    """Arithmetic between quadratic numbers of different fields."""


class DomainError(InputError):
    """Value outside the domain of the operation."""


class SquareRootError(InputError):
    """No exact square root exists and numeric fallback is disabled."""


class ResourceLimitError(GFCError, RuntimeError):
    """A configured resource guard was exceeded."""


class ConsistencyError(GFCError, RuntimeError):
    """Internal cross-check failed."""


class CertificateError(GFCError, RuntimeError):
    """Kani-Rosen certificate failed where it must pass."""

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate
