"""Exception types raised across the package."""

from __future__ import annotations


class GraphStirlingError(Exception):
    """Base class for all package errors."""


class WordError(GraphStirlingError, ValueError):
    """A word could not be parsed as a Dyck word."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class BadCharacter(WordError):
    pass


class UnbalancedWord(WordError):
    pass


class PrefixViolation(WordError):
    pass


class NotQuasiThreshold(GraphStirlingError):
    """Raised when a graph has a connected piece with no universal vertex.

    ``witness`` is the sorted vertex list of that piece.
    """

    def __init__(self, witness: tuple[int, ...]):
        super().__init__(f"not quasi-threshold: component {list(witness)} has no dominating vertex")
        self.witness = witness


class TooLarge(GraphStirlingError):
    """An exponential-time routine was asked to exceed its size cap."""


class InternalInconsistency(GraphStirlingError):
    pass


class NonIntegralResult(GraphStirlingError, ArithmeticError):
    pass


class NegativeResult(GraphStirlingError, ArithmeticError):
    pass


class EmptySequence(GraphStirlingError, ValueError):
    pass


class DegenerateDistribution(GraphStirlingError, ValueError):
    pass


class DegreeCapExceeded(GraphStirlingError):
    pass
