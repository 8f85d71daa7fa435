"""Two-phase greedy clique colouring with at most 2*sqrt(n) colours."""
from __future__ import annotations

import math

from .graph import Colouring, Graph


def greedy_maximal_independent_set(g: Graph, alive: set[int]) -> list[int]:
    """Maximal independent set of ``g[alive]``, in pick order.

    Vertices are scanned by ascending degree within ``g[alive]``, ties broken
    by lowest index.
    """
    order = sorted(alive, key=lambda v: (len(g.adj[v] & alive), v))
    blocked: set[int] = set()
    chosen = []
    for v in order:
        if v not in blocked:
            chosen.append(v)
            blocked.add(v)
            blocked |= g.adj[v]
    return chosen


def greedy_sqrt_colouring(g: Graph) -> Colouring:
    """Clique colouring using at most ``2*sqrt(n)`` colours.

    Phase 1 peels off greedy maximal independent sets, one fresh colour each,
    while they have at least ``sqrt(n)`` vertices. Phase 2 handles the rest
    ``H`` with the last maximal independent set ``I = (u_1, ..., u_k)``: all of
    ``I`` share one fresh colour, and every other vertex of ``H`` takes the
    colour indexed by its first neighbour in ``I``. ``I`` dominates ``H``, so
    that neighbour exists. A maximal clique inside one of these classes is
    extendable by its ``u_i``, and ``I`` is independent, so no maximal clique of
    ``g`` is monochromatic.
    """
    n = g.n
    colours = [-1] * n
    alive = set(range(n))
    threshold = math.sqrt(n)
    next_colour = 0
    while alive:
        mis = greedy_maximal_independent_set(g, alive)
        if len(mis) >= threshold:
            for v in mis:
                colours[v] = next_colour
            next_colour += 1
            alive -= set(mis)
            continue
        star = next_colour
        rank = {u: i for i, u in enumerate(mis)}
        for u in mis:
            colours[u] = star
        for v in alive - set(mis):
            first = min(rank[u] for u in g.adj[v] if u in rank)
            colours[v] = star + 1 + first
        break
    return Colouring(tuple(colours)).compact()


def sqrt_palette_bound(n: int) -> int:
    return math.ceil(2 * math.sqrt(n))
