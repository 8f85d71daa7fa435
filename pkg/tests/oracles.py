"""Independent brute-force oracles. They share no code with the package."""
from __future__ import annotations

from itertools import combinations, product

import networkx as nx


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_maximal_cliques(n: int, edges) -> set[frozenset[int]]:
    """Subset enumeration: cliques with no one-vertex extension."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    out = set()
    for k in range(1, n + 1):
        for s in combinations(range(n), k):
            if all(b in adj[a] for a, b in combinations(s, 2)):
                if not any(all(w in adj[v] for v in s) for w in set(range(n)) - set(s)):
                    out.add(frozenset(s))
    return out


def brute_is_clique_colouring(n: int, edges, colours) -> bool:
    return all(
        len(c) < 2 or len({colours[v] for v in c}) > 1 for c in brute_maximal_cliques(n, edges)
    )


def brute_chi_c(n: int, edges) -> int:
    """Smallest k for which some assignment in ``k^n`` leaves no maximal clique monochromatic."""
    cliques = [c for c in nx.find_cliques(_nx(n, edges)) if len(c) > 1]
    if not cliques:
        return 1
    k = 2
    while True:
        for col in product(range(k), repeat=n):
            if all(len({col[v] for v in c}) > 1 for c in cliques):
                return k
        k += 1


def brute_chromatic_number(n: int, edges) -> int:
    if n == 0:
        return 0
    for k in range(1, n + 1):
        for col in product(range(k), repeat=n):
            if all(col[u] != col[v] for u, v in edges):
                return k
    return n


def brute_clique_transversal(n: int, edges) -> int:
    cliques = [set(c) for c in nx.find_cliques(_nx(n, edges)) if len(c) > 1]
    for k in range(n + 1):
        for s in combinations(range(n), k):
            if all(c & set(s) for c in cliques):
                return k
    return n


def _nx(n, edges) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    return h
