"""Canonical forms of small graphs and exhaustive search for the largest chi_c."""
from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from .exact import chi_c_of_bitmask_graph
from .graph import Graph

MAX_EXHAUSTIVE_N = 7


def pair_list(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def code_of(g: Graph, order: list[int] | tuple[int, ...] | None = None) -> int:
    """Upper-triangle adjacency bits in pair order, first pair most significant.

    ``order[k]`` is the vertex placed at position ``k``.
    """
    order = range(g.n) if order is None else order
    code = 0
    for u, v in combinations(order, 2):
        code = code << 1 | (v in g.adj[u])
    return code


def graph_from_code(n: int, code: int) -> Graph:
    pairs = pair_list(n)
    top = len(pairs) - 1
    return Graph.from_edges(n, (p for b, p in enumerate(pairs) if code >> (top - b) & 1))


def _refined_cells(g: Graph) -> list[list[int]]:
    colour = [len(a) for a in g.adj]
    while True:
        sig = [(colour[v], tuple(sorted(colour[w] for w in g.adj[v]))) for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            colour = new
            break
        colour = new
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_form(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant ``(n, code)``.

    The code is the minimum adjacency bit-string over all vertex orders that
    list the colour-refinement cells in canonical order. Equal forms mean
    isomorphic graphs. Intended for graphs of at most about ten vertices.
    """
    cells = _refined_cells(g)
    best = None
    for parts in product(*(permutations(c) for c in cells)):
        code = code_of(g, [v for part in parts for v in part])
        if best is None or code < best:
            best = code
    return g.n, best if best is not None else 0


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(map(len, g.adj)) != sorted(map(len, h.adj)):
        return False
    return canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=None)
def _orbit_weights(n: int) -> np.ndarray:
    """``W[p, b]``: the code weight bit ``b`` moves to under permutation ``p``."""
    pairs = pair_list(n)
    top = len(pairs) - 1
    index = {p: i for i, p in enumerate(pairs)}
    w = np.zeros((math.factorial(n), len(pairs)), dtype=np.int64)
    for k, perm in enumerate(permutations(range(n))):
        for b, (i, j) in enumerate(pairs):
            a, c = perm[i], perm[j]
            w[k, b] = 1 << (top - index[(min(a, c), max(a, c))])
    return w


def orbit_codes(n: int, code: int) -> np.ndarray:
    """Codes of every relabelling of the graph with the given code."""
    w = _orbit_weights(n)
    top = w.shape[1] - 1
    bits = [b for b in range(w.shape[1]) if code >> (top - b) & 1]
    if not bits:
        return np.zeros(1, dtype=np.int64)
    return w[:, bits].sum(axis=1)


def _bitmask_adjacency(n: int, code: int) -> list[int]:
    adj = [0] * n
    top = n * (n - 1) // 2 - 1
    for b, (i, j) in enumerate(pair_list(n)):
        if code >> (top - b) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return adj


@dataclass
class IsoClass:
    code: int  # minimum code over the orbit
    chi_c: int
    labeled_count: int


def _scan(n: int, prefix_bits: int, prefix: int) -> list[IsoClass]:
    npairs = n * (n - 1) // 2
    low = npairs - prefix_bits
    seen: set[int] = set()
    found = []
    for rest in range(1 << low):
        code = prefix << low | rest
        if code in seen:
            continue
        orbit = orbit_codes(n, code)
        distinct = set(orbit.tolist())
        seen |= distinct
        k, _ = chi_c_of_bitmask_graph(_bitmask_adjacency(n, code))
        found.append(IsoClass(int(orbit.min()), k, len(distinct)))
    return found


@dataclass
class ExhaustiveResult:
    n: int
    max_chi_c: int
    extremal: list[Graph]
    extremal_triangle_free: list[bool]
    # iso classes and labeled graphs per chi_c value
    classes_by_value: Counter = field(default_factory=Counter)
    labeled_by_value: Counter = field(default_factory=Counter)


def exhaustive_chi_c_max(n: int, jobs: int = 1) -> ExhaustiveResult:
    """Largest chi_c over all graphs on ``n <= 7`` vertices, with its maximisers.

    Every one of the ``2^(n(n-1)/2)`` labelled graphs is visited. A graph whose
    code was already produced as a relabelling of an earlier one is skipped,
    since chi_c is an isomorphism invariant; the others get an exact solve and
    their whole orbit is marked. With ``jobs > 1`` the codes are split by
    their leading bits across worker processes.
    """
    if not 1 <= n <= MAX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive search supports 1 <= n <= {MAX_EXHAUSTIVE_N}, got {n}")
    npairs = n * (n - 1) // 2
    prefix_bits = 0
    if jobs > 1:
        prefix_bits = min(npairs, max(1, math.ceil(math.log2(jobs))))
    if prefix_bits:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_scan, [n] * (1 << prefix_bits), [prefix_bits] * (1 << prefix_bits),
                             range(1 << prefix_bits))
            found = [c for part in parts for c in part]
    else:
        found = _scan(n, 0, 0)

    classes: dict[int, IsoClass] = {}
    for c in found:
        classes.setdefault(c.code, c)
    best = max(c.chi_c for c in classes.values())
    extremal = [graph_from_code(n, c.code) for c in sorted(classes.values(), key=lambda c: c.code)
                if c.chi_c == best]
    result = ExhaustiveResult(n, best, extremal, [g.is_triangle_free() for g in extremal])
    for c in classes.values():
        result.classes_by_value[c.chi_c] += 1
        result.labeled_by_value[c.chi_c] += c.labeled_count
    return result
