"""Clique colouring of one strip (R^2) or cylinder (R^3) with at most 3 colours.

Points in a slab of width below sqrt(3)/2 that are not adjacent differ by
more than 1/2 along the slab axis. So "left of and not adjacent" is a strict
partial order and the slab graph is a co-comparability graph.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..budget import Budget
from ..certificate import certify_clique_colouring
from ..exact import find_clique_colouring
from ..exceptions import BudgetExceeded
from ..graph import PointSet, build_geometric_graph, candidate_pair_count

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SlabResult:
    colours: np.ndarray
    n_colours: int
    method: str  # "exact" or "certified"


def colour_slab(points: np.ndarray, axis: int, budget: Budget) -> SlabResult:
    """Colour the unit-radius geometric graph of one slab with 2, else 3 colours.

    The exact hypergraph search is used while the slab has at most
    ``budget.max_edges`` candidate pairs and stays inside the clique/node
    budget. Past that, points are coloured cyclically in order along
    ``axis`` and accepted only if the ball certificate passes.
    """
    n = len(points)
    if n == 1:
        return SlabResult(np.zeros(1, dtype=np.int64), 1, "exact")
    if candidate_pair_count(points, 1.0) <= budget.max_edges:
        g = build_geometric_graph(PointSet(points, 1.0))
        meter = budget.meter()
        try:
            for k in (2, 3):
                found = find_clique_colouring(g, k, meter=meter)
                if found is not None:
                    cols = np.array(found.colours, dtype=np.int64)
                    return SlabResult(cols, len(set(found.colours)), "exact")
        except BudgetExceeded:
            log.info("slab of %d points over exact budget; using certified fallback", n)
        else:
            # co-comparability graphs never need more than 3 colours
            raise AssertionError("slab graph needs more than 3 colours")

    rank = np.empty(n, dtype=np.int64)
    rank[np.argsort(points[:, axis], kind="stable")] = np.arange(n)
    for k in (2, 3):
        cols = rank % k
        if certify_clique_colouring(points, 1.0, cols).certified:
            return SlabResult(cols, len(np.unique(cols)), "certified")
    raise BudgetExceeded(f"slab of {n} points: exact budget exceeded and fallback not certifiable")
