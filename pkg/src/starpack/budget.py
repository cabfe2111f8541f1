"""Search budgets: deterministic node accounting plus a wall-clock fuse."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import BudgetExceededError

# The clock is consulted only every 1024 nodes so that node accounting, the
# deterministic part of the budget, dominates the bookkeeping cost.
_TIME_CHECK_MASK = 0x3FF


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one exact search.

    node_limit caps the number of search-tree nodes and is fully
    deterministic; time_limit (seconds) is a safety net whose trigger point
    depends on the machine.
    """

    node_limit: int = 50_000_000
    time_limit: float = 600.0

    def __post_init__(self) -> None:
        if self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.time_limit <= 0:
            raise ValueError("time_limit must be positive")

    def start(self) -> BudgetTracker:
        return BudgetTracker(self)


DEFAULT_BUDGET = SearchBudget()


class BudgetTracker:
    """Mutable counter handed to a single search run."""

    __slots__ = ("budget", "nodes", "_deadline")

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self._deadline = time.monotonic() + budget.time_limit

    def charge(self, amount: int = 1) -> None:
        """Account for `amount` search nodes; raise once the budget is spent."""
        self.nodes += amount
        if self.nodes > self.budget.node_limit:
            raise BudgetExceededError(
                f"node limit {self.budget.node_limit} exceeded", nodes=self.nodes
            )
        if self.nodes & _TIME_CHECK_MASK == 0 and time.monotonic() > self._deadline:
            raise BudgetExceededError(
                f"time limit {self.budget.time_limit}s exceeded", nodes=self.nodes
            )
