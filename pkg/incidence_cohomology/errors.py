"""Exceptions raised by the incidence cohomology toolkit."""

from __future__ import annotations

__all__ = [
    "IncidenceCohomologyError",
    "DimensionMismatchError",
    "InvalidArgumentError",
    "UnsupportedRankError",
    "EmptyCharacterError",
    "DomainError",
    "OutOfRegionError",
    "OutOfRangeError",
    "NoHighestWeightError",
    "WeightMismatchError",
    "ScanExhaustedError",
    "UnsplitWeightError",
]


class IncidenceCohomologyError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatchError(IncidenceCohomologyError, ValueError):
    """Exponent vectors or characters of different rank were combined."""


class InvalidArgumentError(IncidenceCohomologyError, ValueError):
    """An argument is not of the required arithmetic kind (prime, prime power)."""


class UnsupportedRankError(IncidenceCohomologyError, ValueError):
    """The operation is only available for a specific rank (n = 3)."""


class EmptyCharacterError(IncidenceCohomologyError, ValueError):
    """The zero character has no highest weight."""


class DomainError(IncidenceCohomologyError, ValueError):
    """An integer argument lies outside the domain of the operation."""


class OutOfRegionError(IncidenceCohomologyError, ValueError):
    """A line bundle lies outside the chamber an operation is defined on."""


class OutOfRangeError(IncidenceCohomologyError, ValueError):
    """The (d, e) arguments violate the range a closed formula is valid on."""


class NoHighestWeightError(IncidenceCohomologyError, ValueError):
    """The requested cohomology character vanishes."""


class WeightMismatchError(IncidenceCohomologyError, ValueError):
    """A weight block was requested for a weight of the wrong total degree."""


class ScanExhaustedError(IncidenceCohomologyError, RuntimeError):
    """A regularity scan found no non-vanishing H^1 below its upper bound."""


class UnsplitWeightError(IncidenceCohomologyError, RuntimeError):
    """No power of p splits a non-vanishing h^1(d, e) into matching blocks."""
