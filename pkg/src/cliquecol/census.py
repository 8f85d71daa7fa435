"""Component census and the triangle-free C5 certificate."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .exhaustive import canonical_form
from .graph import Graph, PointSet, build_geometric_graph

MAX_QUERY_ORDER = 10


@dataclass(frozen=True)
class ComponentCensus:
    sizes: dict[int, int]  # component order -> number of components
    matches: int  # components isomorphic to the query graph
    largest: int

    @property
    def total(self) -> int:
        return sum(k * c for k, c in self.sizes.items())


def _check_query(h: Graph) -> None:
    if not 1 <= h.n <= MAX_QUERY_ORDER:
        raise ValueError(f"query graph must have 1..{MAX_QUERY_ORDER} vertices, got {h.n}")
    if len(h.components()) != 1:
        raise ValueError("query graph must be connected")


def component_census(g: Graph, h: Graph) -> ComponentCensus:
    """Histogram of component orders and the number of components isomorphic to ``h``."""
    _check_query(h)
    target = canonical_form(h)
    degrees = sorted(map(len, h.adj))
    sizes: Counter[int] = Counter()
    matches = 0
    for comp in g.components():
        sizes[len(comp)] += 1
        if len(comp) != h.n:
            continue
        sub = g.induced(comp)
        # cheap invariants first; the canonical form is exponential in the worst case
        if sub.m == h.m and sorted(map(len, sub.adj)) == degrees and canonical_form(sub) == target:
            matches += 1
    return ComponentCensus(dict(sorted(sizes.items())), matches, max(sizes, default=0))


def triangle_free_edges(g: Graph) -> list[frozenset[int]]:
    """Adjacency restricted to edges with no common neighbour."""
    return [frozenset(v for v in g.adj[u] if not g.adj[u] & g.adj[v]) for u in range(g.n)]


def _odd_cycle_vertices(adj: list[frozenset[int]]) -> list[int]:
    """Vertices of the non-bipartite components; only these can lie on a 5-cycle."""
    side = [-1] * len(adj)
    out = []
    for s in range(len(adj)):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack, comp, odd = [s], [s], False
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                    comp.append(w)
                elif side[w] == side[u]:
                    odd = True
        if odd:
            out.extend(sorted(comp))
    return sorted(out)


def find_triangle_free_c5(
    g: Graph | None = None, ps: PointSet | None = None
) -> tuple[int, int, int, int, int] | None:
    """A 5-cycle none of whose edges lies in a triangle, in cycle order.

    Every chord of a 5-cycle closes a triangle with two cycle edges, so the
    cycle returned is induced. Such a cycle forces 3 colours: its edges are
    maximal cliques. Pass either the graph or the points it comes from.
    """
    if g is None:
        if ps is None:
            raise ValueError("need a graph or a point set")
        g = build_geometric_graph(ps)
    free = triangle_free_edges(g)
    for a in _odd_cycle_vertices(free):
        # a is the smallest vertex on the cycle, b < e fixes the direction
        fa = [v for v in free[a] if v > a]
        for b in fa:
            for c in free[b]:
                if c <= a:
                    continue
                for d in free[c]:
                    if d <= a or d == b:
                        continue
                    for e in free[d] & free[a]:
                        if e > b and e != c:
                            return a, b, c, d, e
    return None
