"""Exception types shared across the package.

Every error that reports a law violation carries a ``witness`` dict with
the minimal data needed to replay the failure (element labels, indices,
offending values).
"""

from __future__ import annotations


class QuantalabError(Exception):
    """Base class; ``witness`` holds a minimal counterexample, if any."""

    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = witness or {}

    def __str__(self) -> str:
        base = super().__str__()
        if self.witness:
            return f"{base} (witness: {self.witness})"
        return base


class NotALattice(QuantalabError):
    """The order is not a lattice (or not even a partial order)."""


class NotAssociative(QuantalabError):
    """The tensor table violates associativity."""


class UnitLawFails(QuantalabError):
    """The declared unit is not neutral for the tensor."""


class NotDistributive(QuantalabError):
    """The tensor does not distribute over joins (or absorb bottom)."""


class UnknownLabel(QuantalabError):
    """An element label does not occur in the carrier."""


class BadParameter(QuantalabError):
    """A builtin family parameter or document field is out of range."""


class CarrierMismatch(QuantalabError):
    """Two tables that must share a carrier or quantale do not."""


class PointOutOfRange(QuantalabError):
    """A point index is outside its carrier."""


class CapExceeded(QuantalabError):
    """An enumeration or materialization would exceed the configured cap."""


class NotCommutative(QuantalabError):
    """An operation that assumes a commutative quantale got one that is not."""


class NotGoguen(QuantalabError):
    """A map declared as a Goguen map violates the Goguen condition."""


class NotAPullback(QuantalabError):
    """The given square of maps is not a pullback."""


class NotReflexivePair(QuantalabError):
    """The given parallel pair has no common left inverse as claimed."""


class NotSeparated(QuantalabError):
    """A Q-order that must be separated is not."""
