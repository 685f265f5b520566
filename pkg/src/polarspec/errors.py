"""Exception types shared by the library and the CLI."""


class SpectrumError(Exception):
    """Base class for all errors raised by polarspec."""


class ValidationError(SpectrumError, ValueError):
    """Input violates a precondition (non-decreasing set, bad pattern, ...)."""


class CapExceededError(SpectrumError):
    """A brute-force or sampling routine was asked to go past its size cap."""
