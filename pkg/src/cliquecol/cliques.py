"""Maximal clique enumeration and clique-colouring verification."""
from __future__ import annotations

import heapq
from typing import Iterator, Sequence

from .budget import Meter
from .graph import CliqueHypergraph, Colouring, Graph


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def local_bitmasks(g: Graph, vertices: Sequence[int]) -> list[int]:
    """Adjacency of ``g[vertices]`` as bitmasks over local indices."""
    index = {v: i for i, v in enumerate(vertices)}
    masks = []
    for v in vertices:
        m = 0
        for w in g.adj[v]:
            i = index.get(w)
            if i is not None:
                m |= 1 << i
        masks.append(m)
    return masks


def _degeneracy_order(adj: list[int]) -> list[int]:
    deg = [a.bit_count() for a in adj]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    alive = (1 << len(adj)) - 1
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if not alive >> v & 1 or d != deg[v]:
            continue
        order.append(v)
        alive &= ~(1 << v)
        for w in iter_bits(adj[v] & alive):
            deg[w] -= 1
            heapq.heappush(heap, (deg[w], w))
    return order


def maximal_clique_masks(adj: list[int], meter: Meter | None = None) -> list[int]:
    """Maximal cliques of a bitmask graph, as bitmasks.

    Pivoting Bron-Kerbosch: the pivot is the vertex of ``P | X`` with the most
    neighbours in ``P``; the outer loop runs in degeneracy order. Isolated
    vertices come out as singleton masks.
    """
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                if meter is not None:
                    meter.charge_clique()
                out.append(r)
            return
        pivot, best = -1, -1
        for u in iter_bits(p | x):
            c = (p & adj[u]).bit_count()
            if c > best:
                pivot, best = u, c
        for v in iter_bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    later = 0
    order = _degeneracy_order(adj)
    for v in reversed(order):
        later |= 1 << v
    for v in order:
        bit = 1 << v
        later &= ~bit
        expand(bit, adj[v] & later, adj[v] & ~later)
    return out


def enumerate_maximal_cliques(g: Graph, meter: Meter | None = None) -> CliqueHypergraph:
    cliques: list[frozenset[int]] = []
    singletons: list[int] = []
    for comp in g.components():
        if len(comp) == 1:
            singletons.append(comp[0])
            continue
        for mask in maximal_clique_masks(local_bitmasks(g, comp), meter):
            cliques.append(frozenset(comp[i] for i in iter_bits(mask)))
    cliques.sort(key=lambda c: (len(c), sorted(c)))
    return CliqueHypergraph(g.n, tuple(cliques), tuple(singletons))


def monochromatic_maximal_clique(adj: list[int], cls: int, meter: Meter | None = None) -> int:
    """A maximal clique of the whole graph with all vertices in ``cls``, or 0.

    A clique ``R`` is maximal iff its common neighbourhood ``N(R)`` is empty.
    Cliques inside ``cls`` are grown in increasing vertex order. A branch is
    cut when some vertex of ``N(R)`` that can no longer join ``R`` is adjacent
    to every remaining candidate, since it then stays a common neighbour of
    every extension.
    """
    found = 0

    def grow(r: int, cn: int, p: int) -> bool:
        nonlocal found
        if meter is not None:
            meter.charge_node()
        if not cn:
            if r & (r - 1):
                found = r
                return True
            return False
        if not p:
            return False
        for w in iter_bits(cn & ~p):
            if not p & ~adj[w]:
                return False
        for v in iter_bits(p):
            ncn = cn & adj[v]
            if grow(r | 1 << v, ncn, ncn & cls & ~((2 << v) - 1)):
                return True
        return False

    for v in iter_bits(cls):
        if adj[v] and grow(1 << v, adj[v], adj[v] & cls & ~((2 << v) - 1)):
            return found
    return 0


def is_clique_colouring(
    g: Graph,
    colouring: Colouring | Sequence[int],
    meter: Meter | None = None,
    method: str = "classes",
) -> tuple[bool, frozenset[int] | None]:
    """Check that no maximal clique with two or more vertices is monochromatic.

    Returns ``(True, None)`` or ``(False, clique)`` with a monochromatic
    maximal clique. ``method="classes"`` searches each colour class for a
    clique with no common neighbour, which stays fast on dense graphs with
    many maximal cliques. ``method="enumerate"`` lists every maximal clique.
    """
    colours = colouring.colours if isinstance(colouring, Colouring) else tuple(colouring)
    if len(colours) != g.n:
        raise ValueError(f"colouring has length {len(colours)}, graph has {g.n} vertices")
    if method not in ("classes", "enumerate"):
        raise ValueError(f"unknown method {method!r}")
    for comp in g.components():
        if len(comp) == 1:
            continue
        adj = local_bitmasks(g, comp)
        classes: dict[int, int] = {}
        for i, v in enumerate(comp):
            classes[colours[v]] = classes.get(colours[v], 0) | (1 << i)
        if method == "classes":
            for cls in classes.values():
                mask = monochromatic_maximal_clique(adj, cls, meter)
                if mask:
                    return False, frozenset(comp[i] for i in iter_bits(mask))
            continue
        for mask in maximal_clique_masks(adj, meter):
            low = (mask & -mask).bit_length() - 1
            if mask & classes[colours[comp[low]]] == mask:
                return False, frozenset(comp[i] for i in iter_bits(mask))
    return True, None
