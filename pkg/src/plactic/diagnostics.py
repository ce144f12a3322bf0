"""Exception types and the check-result record shared by the verification code."""

from __future__ import annotations

from dataclasses import dataclass


class PlacticError(ValueError):
    """Base class for domain errors raised by this package."""


class SizeMismatch(PlacticError):
    pass


class NonIntegerMean(PlacticError):
    """An orbit mean that should be an integer is not; this is always a bug."""


class RowTableau(PlacticError):
    pass


class NotDecreasing(PlacticError):
    pass


class KTooSmall(PlacticError):
    pass


class ShapeInfeasible(PlacticError):
    pass


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    counterexample: str | None = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def fail(cls, message: str, checked: int = 0) -> "CheckResult":
        return cls(False, message, checked)
