"""Exception hierarchy shared by all modules."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .multisegments import LinkedTriple


class ParseError(ValueError):
    """Malformed text literal. ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int | None = None) -> None:
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class InvalidPathError(ValueError):
    """A height sequence violating the Motzkin conditions."""


class DomainError(ValueError):
    """A well-formed object outside the class an operation requires."""


class NotWeightValidError(DomainError):
    def __init__(self, weight: tuple[int, ...], length: int) -> None:
        self.weight = weight
        self.length = length
        expected = tuple([length + 1] * length)
        super().__init__(f"weight {weight} is not {expected}")


class NotInMError(DomainError):
    """More than one cut at some column."""

    def __init__(self, column: int, cuts: int) -> None:
        self.column = column
        self.cuts = cuts
        super().__init__(f"column {column} has {cuts} cuts (at most 1 allowed)")


class NotExcessiveError(DomainError):
    def __init__(self, witness: LinkedTriple) -> None:
        self.witness = witness
        super().__init__(f"not excessive: linked triple {witness}")


class NotASuspensionError(DomainError):
    pass


class InvalidRankTupleError(DomainError):
    def __init__(self, i: int, j: int, multiplicity: int) -> None:
        self.i = i
        self.j = j
        self.multiplicity = multiplicity
        super().__init__(
            f"not a rank tuple of a multisegment: multiplicity of [{i},{j}] "
            f"would be {multiplicity}"
        )


class InternalDefect(RuntimeError):
    """Raised when a proven identity fails; always indicates a bug."""
