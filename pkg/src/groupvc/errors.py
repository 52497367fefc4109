"""Exception types shared across the package."""

from __future__ import annotations


class GroupValidationError(ValueError):
    """A Cayley table violates a group axiom.

    Carries the name of the first violated axiom and a witness tuple of
    element indices demonstrating the violation.
    """

    def __init__(self, axiom: str, witness: tuple, message: str) -> None:
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class CapacityError(ValueError):
    """An input exceeds a documented size cap (group order, probe width, ...)."""


class FrontierCapError(RuntimeError):
    """The exact VC search exceeded its level frontier cap.

    Raised instead of silently degrading; callers that run batches of trials
    record it per trial and continue.
    """

    def __init__(self, level: int, cap: int) -> None:
        super().__init__(
            f"VC search frontier exceeded {cap} sets at level {level}"
        )
        self.level = level
        self.cap = cap


class EmptyFamilyError(ValueError):
    """VC-dimension of a family with no members is undefined."""
