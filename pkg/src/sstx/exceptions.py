"""Exception hierarchy shared by all sstx modules."""


class SstxError(Exception):
    """Base class for every error raised by sstx."""


class InvalidSpecError(SstxError, ValueError):
    """A component specification or configuration violates its invariants."""


class SignalFormatError(SstxError, ValueError):
    """A signal file could not be parsed."""

    def __init__(self, message, row=None):
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
        self.row = row


class QuadratureError(SstxError, RuntimeError):
    """A numerical integral failed its convergence test."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class GridError(SstxError, ValueError):
    """A scale or frequency grid does not fit the signal."""


class TooFewExtremaError(SstxError, ValueError):
    """Envelope construction needs at least two maxima and two minima."""


class ConstantMismatchError(SstxError, ValueError):
    """Wavelet constants were computed for a different wavelet."""
