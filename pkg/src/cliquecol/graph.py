"""Graphs, point sets, colourings and geometric-graph construction."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .exceptions import DimensionMismatch


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on vertices ``0..n-1`` stored as neighbour sets."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n >= 0")
        for u, nbrs in enumerate(self.adj):
            if u in nbrs:
                raise ValueError(f"self-loop at {u}")
            for v in nbrs:
                if not 0 <= v < self.n or u not in self.adj[v]:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_adjacency_matrix(cls, a) -> "Graph":
        a = np.asarray(a)
        iu, ju = np.nonzero(np.triu(a, 1))
        return cls.from_edges(a.shape[0], zip(iu.tolist(), ju.tolist()))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, tuple(frozenset() for _ in range(n)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple(frozenset(set(range(n)) - {i}) for i in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int8)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled ``0..len(vertices)-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            tuple(frozenset(index[w] for w in self.adj[v] if w in index) for v in vertices),
        )

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
                        comp.append(w)
            comps.append(sorted(comp))
        return comps

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        return Graph(
            self.n + other.n,
            self.adj + tuple(frozenset(w + shift for w in s) for s in other.adj),
        )

    def is_triangle_free(self) -> bool:
        return not any(self.adj[u] & self.adj[v] for u, v in self.edges())

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))


@dataclass(frozen=True)
class PointSet:
    """Points in R^d with a threshold radius."""

    points: np.ndarray
    radius: float = 1.0

    def __post_init__(self):
        pts = self.points
        if not isinstance(pts, np.ndarray):
            rows = [tuple(p) for p in pts]
            dims = {len(p) for p in rows}
            if len(dims) > 1:
                raise DimensionMismatch(f"points have mixed dimensions {sorted(dims)}")
            pts = np.array(rows, dtype=float).reshape(len(rows), dims.pop() if dims else 0)
        pts = np.array(pts, dtype=float)
        if pts.ndim != 2:
            raise DimensionMismatch("points must form a 2-d array (n, dim)")
        if len(pts) and pts.shape[1] < 1:
            raise DimensionMismatch("dimension must be at least 1")
        if not np.all(np.isfinite(pts)):
            raise ValueError("point coordinates must be finite")
        if not self.radius > 0:
            raise ValueError("radius must be strictly positive")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return len(self.points)

    def rescaled(self) -> "PointSet":
        """Same graph with the radius rescaled to 1."""
        return PointSet(self.points / self.radius, 1.0)


@dataclass(frozen=True)
class Colouring:
    colours: tuple[int, ...]
    palette_size: int = field(init=False)

    def __post_init__(self):
        cols = tuple(int(c) for c in self.colours)
        if any(c < 0 for c in cols):
            raise ValueError("colour ids must be non-negative")
        object.__setattr__(self, "colours", cols)
        object.__setattr__(self, "palette_size", len(set(cols)))

    def __len__(self) -> int:
        return len(self.colours)

    def __getitem__(self, v: int) -> int:
        return self.colours[v]

    def compact(self) -> "Colouring":
        """Relabel colours ``0..k-1`` in order of first appearance."""
        ids: dict[int, int] = {}
        return Colouring(tuple(ids.setdefault(c, len(ids)) for c in self.colours))

    def to_json_dict(self) -> dict:
        return {"palette": self.palette_size, "colours": list(self.colours)}


@dataclass(frozen=True)
class CliqueHypergraph:
    """Maximal cliques of a graph.

    ``cliques`` holds the cliques with at least two vertices; isolated
    vertices are listed separately in ``singletons`` since they never
    constrain a clique colouring.
    """

    n: int
    cliques: tuple[frozenset[int], ...]
    singletons: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.cliques)

    def all_cliques(self) -> tuple[frozenset[int], ...]:
        return self.cliques + tuple(frozenset((v,)) for v in self.singletons)


def pairwise_distances(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise Euclidean distances; the single metric used for adjacency."""
    d = a - b
    return np.sqrt(np.einsum("ij,ij->i", d, d))


def _neighbour_offsets(dim: int) -> list[tuple[int, ...]]:
    # half of the 3^d stencil: the zero offset plus the lexicographically positive ones
    return [o for o in product((-1, 0, 1), repeat=dim) if o >= (0,) * dim]


def _cell_keys(cells: np.ndarray) -> tuple[np.ndarray, np.ndarray] | None:
    """Mixed-radix key per cell plus the radix strides; ``None`` on overflow risk."""
    extent = cells.max(axis=0) + 3
    if float(np.prod(extent.astype(float))) > 2.0**62:
        return None
    strides = np.ones(cells.shape[1], dtype=np.int64)
    for k in range(cells.shape[1] - 2, -1, -1):
        strides[k] = strides[k + 1] * extent[k + 1]
    return (cells + 1) @ strides, strides


def _bucket(points: np.ndarray, r: float):
    side = r
    lo = points.min(axis=0)
    while True:
        cells = np.floor((points - lo) / side).astype(np.int64)
        keyed = _cell_keys(cells)
        if keyed is not None:
            return keyed
        # any cell side >= r is still correct with the 3^d stencil
        side *= 2.0


def candidate_pair_count(points: np.ndarray, r: float) -> int:
    """Number of pairs the grid stencil would test, without materialising them."""
    points = np.asarray(points, dtype=float)
    if len(points) < 2:
        return 0
    key, strides = _bucket(points, r)
    uniq, counts = np.unique(key, return_counts=True)
    total = int((counts * (counts - 1) // 2).sum())
    for off in _neighbour_offsets(points.shape[1])[1:]:
        nk = uniq + int(np.dot(off, strides))
        pos = np.searchsorted(uniq, nk)
        pos[pos == len(uniq)] = 0
        hit = uniq[pos] == nk
        total += int((counts[hit] * counts[pos[hit]]).sum())
    return total


def geometric_pairs(points: np.ndarray, r: float) -> np.ndarray:
    """All index pairs ``(i, j)``, ``i < j``, with distance at most ``r``.

    Uniform grid bucketing with cell side ``r``: each point is compared with
    points in its own cell and in half of the neighbouring cells, so the cost
    is linear in the number of points plus candidate pairs.
    """
    points = np.asarray(points, dtype=float)
    n = len(points)
    if n < 2:
        return np.empty((0, 2), dtype=np.int64)
    key, strides = _bucket(points, r)
    order = np.argsort(key, kind="stable")
    skey = key[order]
    uniq, start, counts = np.unique(skey, return_index=True, return_counts=True)
    out = []
    for off in _neighbour_offsets(points.shape[1]):
        nk = key + int(np.dot(off, strides))
        pos = np.searchsorted(uniq, nk)
        pos[pos == len(uniq)] = 0
        hit = np.nonzero(uniq[pos] == nk)[0]
        if not len(hit):
            continue
        cnt = counts[pos[hit]]
        first = start[pos[hit]]
        i = np.repeat(hit, cnt)
        within = np.arange(cnt.sum()) - np.repeat(np.cumsum(cnt) - cnt, cnt)
        j = order[np.repeat(first, cnt) + within]
        if not any(off):
            keep = i < j
            i, j = i[keep], j[keep]
        ok = pairwise_distances(points[i], points[j]) <= r
        i, j = i[ok], j[ok]
        out.append(np.stack([np.minimum(i, j), np.maximum(i, j)], axis=1))
    if not out:
        return np.empty((0, 2), dtype=np.int64)
    pairs = np.concatenate(out)
    return pairs[np.lexsort((pairs[:, 1], pairs[:, 0]))]


def brute_force_pairs(points: np.ndarray, r: float) -> np.ndarray:
    """All pairs within ``r`` by direct comparison; quadratic, for small inputs."""
    points = np.asarray(points, dtype=float)
    i, j = np.triu_indices(len(points), 1)
    ok = pairwise_distances(points[i], points[j]) <= r
    return np.stack([i[ok], j[ok]], axis=1).astype(np.int64)


def build_geometric_graph(ps: PointSet) -> Graph:
    """Vertices ``i != j`` are adjacent iff ``|x_i - x_j| <= radius``."""
    pts = ps.points
    if len(pts) <= 64 or ps.dim > 3:
        pairs = brute_force_pairs(pts, ps.radius)
    else:
        pairs = geometric_pairs(pts, ps.radius)
    return graph_from_pairs(len(pts), pairs)


def graph_from_pairs(n: int, pairs: np.ndarray) -> Graph:
    if not len(pairs):
        return Graph.empty(n)
    both = np.concatenate([pairs, pairs[:, ::-1]])
    both = both[np.argsort(both[:, 0], kind="stable")]
    bounds = np.searchsorted(both[:, 0], np.arange(n + 1))
    tgt = both[:, 1].tolist()
    return Graph(n, tuple(frozenset(tgt[bounds[v]:bounds[v + 1]]) for v in range(n)))
