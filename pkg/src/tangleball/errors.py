"""Exception types shared across the package."""

from __future__ import annotations


class ConwaySyntaxError(ValueError):
    """Malformed Conway tangle text; carries the 0-based offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"syntax error at position {position}: {message}")
        self.position = position


class NotRationalError(ValueError):
    """Raised when a fraction is requested for a tangle containing a formal sum."""


class MalformedCodeError(ValueError):
    """A PD code violates its structural invariants."""


class NonPlanarCodeError(ValueError):
    """A PD code admits no checkerboard coloring (corrupted rotation system)."""


class UnknownComponentError(KeyError):
    """A diagram component name is not present in the code."""


class DegenerateProjectionError(RuntimeError):
    """The projection direction is non-generic for the given polylines."""


class UnsupportedNError(ValueError):
    """The requested arm count is outside the constructor's domain."""


class ConstructionError(RuntimeError):
    """A deterministic construction schedule was exhausted (indicates a bug)."""
