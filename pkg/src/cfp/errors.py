"""Exception hierarchy for the cfp package."""

from __future__ import annotations


class CfpError(Exception):
    """Base class for all cfp errors."""


class DimensionMismatch(CfpError):
    """Two points (or a point and a space) disagree on dimension."""

    def __init__(self, expected: int, got: int):
        super().__init__(f"dimension mismatch: expected {expected}, got {got}")
        self.expected = expected
        self.got = got


class DomainError(CfpError):
    """An argument lies outside the mathematical domain of an operation."""


class ParseError(CfpError):
    """Expression text failed to parse.

    `position` is a 1-based byte offset into the source; `expected` lists
    the token spellings that would have been accepted there.
    """

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        detail = f"{message} at offset {position}"
        if expected:
            detail += " (expected " + " or ".join(repr(e) for e in expected) + ")"
        super().__init__(detail)
        self.position = position
        self.expected = expected


class EvalError(CfpError):
    """Expression evaluation hit an unbound name or a numeric domain error."""


class SectionRangeError(CfpError):
    """The g-section failed to land a value inside g's range.

    Raised when d(g(section(t)), t) exceeds the problem's section tolerance,
    i.e. the range-inclusion hypothesis is violated at `value`.
    """

    def __init__(self, value, deviation: float, tol: float):
        super().__init__(
            f"g-section failed on value {value!r}: d(g(section(t)), t) = "
            f"{deviation:.3e} exceeds tolerance {tol:.1e}"
        )
        self.value = value
        self.deviation = deviation


class ComparabilityError(CfpError):
    """A bridge pair's image is not comparable to a required image."""


class UnknownProblemError(CfpError):
    """Requested catalog id does not exist."""


class ProblemFileError(CfpError):
    """A problem file is missing keys, inconsistent, or fails to parse."""
