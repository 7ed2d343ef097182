"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class CobordiaError(Exception):
    """Base class for all library errors."""


class ParseError(CobordiaError, ValueError):
    """Malformed object text or JSON input."""

    def __init__(self, message: str, position: int | None = None, path: str | None = None):
        super().__init__(message)
        self.position = position
        self.path = path


class InvalidPairingError(CobordiaError, ValueError):
    """A pairing failed validation; ``violations`` lists every problem found."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


class BoundaryMismatchError(CobordiaError, ValueError):
    """Two morphisms or arrays were composed along unequal boundaries."""

    def __init__(self, left: object, right: object, what: str = "boundary"):
        super().__init__(f"{what} mismatch: '{left}' != '{right}'")
        self.left = left
        self.right = right


class ResourceBoundError(CobordiaError):
    """A configurable size bound (points, legs) would be exceeded."""


class MissingDualityError(CobordiaError, KeyError):
    """No duality data is available for the requested object."""

    def __str__(self) -> str:
        return Exception.__str__(self)


class UnknownSuiteError(CobordiaError, KeyError):
    """``run_suite`` was asked for a suite that does not exist."""

    def __str__(self) -> str:
        return Exception.__str__(self)
