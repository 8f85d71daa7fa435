"""Nine-colour clique colouring of unit disk graphs by horizontal strips."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from ..budget import DEFAULT_BUDGET, Budget
from ..exceptions import DimensionMismatch
from ..graph import Colouring, Graph, PointSet, pairwise_distances
from ._slab import colour_slab

log = logging.getLogger(__name__)

SQRT3_2 = math.sqrt(3) / 2


@dataclass(frozen=True)
class StripParams:
    # midpoint of the admissible open interval (1/2, sqrt(3)/2)
    strip_height: float = (0.5 + SQRT3_2) / 2
    anchor: float = 0.0

    def __post_init__(self):
        if not 0.5 < self.strip_height < SQRT3_2:
            raise ValueError(f"strip height must lie in (1/2, sqrt(3)/2), got {self.strip_height}")

    def strip_index(self, y: np.ndarray) -> np.ndarray:
        return np.floor((np.asarray(y) - self.anchor) / self.strip_height).astype(np.int64)


@dataclass
class StripReport:
    strips: int = 0
    three_colour_strips: list[int] = field(default_factory=list)
    certified_strips: list[int] = field(default_factory=list)


def strip_colouring(
    ps: PointSet,
    params: StripParams | None = None,
    budget: Budget = DEFAULT_BUDGET,
    report: StripReport | None = None,
) -> Colouring:
    """Clique colouring of a planar geometric graph with at most 9 colours.

    Strips of height ``params.strip_height`` (after rescaling the radius to 1)
    each get a clique colouring with at most 3 colours. Strips then take the
    palettes ``{0,1,2}``, ``{3,4,5}``, ``{6,7,8}`` cyclically. Two strips with
    the same palette are more than 1 apart, and a maximal clique that meets
    two strips has two palettes.

    Pass a :class:`StripReport` to learn which strips needed a third colour.
    """
    if ps.dim != 2:
        raise DimensionMismatch(f"strip requires dimension 2, got {ps.dim}")
    params = params or StripParams()
    pts = ps.points / ps.radius
    colours = np.zeros(len(pts), dtype=np.int64)
    if not len(pts):
        return Colouring(())
    idx = params.strip_index(pts[:, 1])
    order = np.argsort(idx, kind="stable")
    cuts = np.nonzero(np.diff(idx[order]))[0] + 1
    report = report if report is not None else StripReport()
    for members in np.split(order, cuts):
        s = int(idx[members[0]])
        res = colour_slab(pts[members], 0, budget)
        report.strips += 1
        if res.n_colours > 2:
            report.three_colour_strips.append(s)
            log.warning("strip %d needed 3 colours", s)
        if res.method == "certified":
            report.certified_strips.append(s)
        colours[members] = 3 * (s % 3) + res.colours
    return Colouring(tuple(colours.tolist()))


@dataclass(frozen=True)
class StrictOrder:
    """Strict partial order on ``n`` items given by its ordered pairs ``(u, v)``: ``u < v``."""

    n: int
    pairs: frozenset[tuple[int, int]]

    def precedes(self, u: int, v: int) -> bool:
        return (u, v) in self.pairs

    def is_strict_partial_order(self) -> bool:
        if any((v, u) in self.pairs or u == v for u, v in self.pairs):
            return False
        succ: dict[int, set[int]] = {}
        for u, v in self.pairs:
            succ.setdefault(u, set()).add(v)
        return all(
            (u, w) in self.pairs for u, v in self.pairs for w in succ.get(v, ())
        )

    def longest_chain(self) -> int:
        if not self.n:
            return 0
        succ: dict[int, list[int]] = {}
        indeg = [0] * self.n
        for u, v in self.pairs:
            succ.setdefault(u, []).append(v)
            indeg[v] += 1
        depth = [1] * self.n
        queue = [v for v in range(self.n) if not indeg[v]]
        while queue:
            u = queue.pop()
            for v in succ.get(u, ()):
                depth[v] = max(depth[v], depth[u] + 1)
                indeg[v] -= 1
                if not indeg[v]:
                    queue.append(v)
        return max(depth)

    def incomparability_graph(self) -> Graph:
        return Graph.from_edges(
            self.n,
            ((u, v) for u, v in combinations(range(self.n), 2)
             if (u, v) not in self.pairs and (v, u) not in self.pairs),
        )


def strip_cocomparability_order(points, radius: float = 1.0, axis: int = 0) -> StrictOrder:
    """``u < v`` iff ``u`` is strictly left of ``v`` along ``axis`` and they are not adjacent.

    Raises ``ValueError`` if the result is not a strict partial order, which
    happens when the points do not fit in one strip.
    """
    pts = np.asarray(points, dtype=float) / radius
    n = len(pts)
    pairs = set()
    if n > 1:
        i, j = np.triu_indices(n, 1)
        far = pairwise_distances(pts[i], pts[j]) > 1.0
        for u, v in zip(i[far].tolist(), j[far].tolist()):
            if pts[u, axis] < pts[v, axis]:
                pairs.add((u, v))
            elif pts[v, axis] < pts[u, axis]:
                pairs.add((v, u))
    order = StrictOrder(n, frozenset(pairs))
    if not order.is_strict_partial_order():
        raise ValueError("relation is not a strict partial order; points exceed one strip")
    return order
