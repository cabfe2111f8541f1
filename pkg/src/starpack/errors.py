"""Exception types shared across more than one module.

Graph-validation and codec errors live next to the code that raises them;
the classes here are the common base plus the three outcomes that every
exact search can report.
"""

from __future__ import annotations


class StarpackError(Exception):
    """Base class for every error raised by this package."""


class BudgetExceededError(StarpackError):
    """A search ran out of nodes or wall-clock time.  Inconclusive: the
    structure may or may not exist."""

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


class ExhaustedError(StarpackError):
    """An exact search explored its entire tree and proved that no witness
    exists.  Unlike BudgetExceededError this is a definitive negative."""


class ArithmeticInfeasibleError(StarpackError):
    """A counting argument rules the requested structure out before any
    search starts (e.g. no non-negative solution of 5a + 6b = n)."""
