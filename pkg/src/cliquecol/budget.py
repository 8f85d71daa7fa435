from __future__ import annotations

import time
from dataclasses import dataclass

from .exceptions import BudgetExceeded


@dataclass(frozen=True)
class Budget:
    """Resource caps for the exact searches.

    ``max_edges`` only guards the geometric sub-solvers (strips and
    cylinders): above it the exact hypergraph search is skipped in favour of
    the certified constructive fallback. Random-graph components with more
    than ``max_component_order`` vertices are bounded rather than solved.
    """

    max_cliques: int = 10**6
    max_nodes: int = 10**8
    max_seconds: float | None = None
    max_edges: int = 200_000
    max_component_order: int = 256

    def meter(self) -> "Meter":
        return Meter(self)


class Meter:
    """Mutable counters charged against a :class:`Budget`."""

    __slots__ = ("budget", "cliques", "nodes", "_deadline")

    def __init__(self, budget: Budget):
        self.budget = budget
        self.cliques = 0
        self.nodes = 0
        self._deadline = (
            None if budget.max_seconds is None else time.monotonic() + budget.max_seconds
        )

    def charge_clique(self, k: int = 1) -> None:
        self.cliques += k
        if self.cliques > self.budget.max_cliques:
            raise BudgetExceeded(f"more than {self.budget.max_cliques} maximal cliques")

    def charge_node(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceeded(f"more than {self.budget.max_nodes} search nodes")
        # checking the clock every node is too slow
        if self._deadline is not None and not self.nodes & 0x3FF:
            if time.monotonic() > self._deadline:
                raise BudgetExceeded(f"time limit of {self.budget.max_seconds}s exceeded")


DEFAULT_BUDGET = Budget()
