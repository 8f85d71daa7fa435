"""Realising any graph as a geometric graph with threshold sqrt(2)."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import MarginCollapse
from .graph import Graph, PointSet, build_geometric_graph

SQRT2 = math.sqrt(2)
BASE_OFFSET = 0.05
MAX_EPS = 1e-2


@dataclass(frozen=True)
class Embedding:
    """Points realising a graph at threshold ``sqrt 2``.

    ``margin`` is the smallest gap between a pairwise distance and the
    threshold.
    """

    points: np.ndarray
    margin: float
    threshold: float = SQRT2

    def point_set(self) -> PointSet:
        return PointSet(self.points, self.threshold)

    def rebuild(self) -> Graph:
        return build_geometric_graph(self.point_set())


def _displacement(g: Graph, m: int) -> np.ndarray:
    """The ``y`` in R^m with ``y . 1 = 0`` and ``y . (e_m - e_i) = -1 / +1`` (edge / non-edge)."""
    rows = np.zeros((m, m))
    rhs = np.zeros(m)
    rows[0] = 1.0
    for i in range(m - 1):
        rows[i + 1, m - 1] = 1.0
        rows[i + 1, i] = -1.0
        rhs[i + 1] = -1.0 if g.has_edge(i, m - 1) else 1.0
    return np.linalg.solve(rows, rhs)


def _gap(delta: float) -> float:
    return min(math.sqrt(2 + delta) - SQRT2, SQRT2 - math.sqrt(2 - delta))


def _affine_reduce(x: np.ndarray) -> np.ndarray:
    """Coordinates of points on ``1 . x = 1`` in an orthonormal basis of that hyperplane."""
    n = x.shape[1]
    q, _ = np.linalg.qr(np.eye(n) - 1.0 / n)
    basis = q[:, : n - 1]
    return (x - 1.0 / n) @ basis


def embed_graph(g: Graph, target_margin: float = 1e-9, reduce: bool = False) -> Embedding:
    """Points ``x_1..x_n`` in R^n realising ``g`` at threshold ``sqrt 2``.

    Vertex ``m`` (for ``m = n, n-1, ..., 3``) is placed at ``e_m + delta y``,
    which puts it within ``sqrt(2 -/+ delta)`` of every unit vector ``e_i``,
    ``i < m``. Every earlier vertex is then kept within ``eta`` (half the
    resulting gap) of its unit vector, so the inequalities survive. The first
    two vertices are pushed together or apart along ``e_2 - e_1`` by at most
    half of the allowed displacement. All points satisfy ``1 . x = 1``.

    With ``reduce=True`` the points are expressed in ``n - 1`` coordinates.
    Raises :class:`MarginCollapse` if the realised margin is below
    ``target_margin``.
    """
    n = g.n
    if n < 2:
        raise ValueError("embedding needs at least 2 vertices")
    x = np.eye(n)
    allowed = math.inf
    for m in range(n, 2, -1):
        y = _displacement(g, m)
        norm = float(np.linalg.norm(y))
        eps = min(allowed, MAX_EPS, 1 / (4 * norm))
        delta = eps / norm
        x[m - 1, :m] += delta * y
        allowed = _gap(delta) / 2
    t = min(BASE_OFFSET, allowed / 2)
    u = np.zeros(n)
    u[0], u[1] = -1 / SQRT2, 1 / SQRT2
    sign = 1.0 if g.has_edge(0, 1) else -1.0
    x[0] += sign * t * u
    x[1] -= sign * t * u

    pts = _affine_reduce(x) if reduce else x
    i, j = np.triu_indices(n, 1)
    d = np.linalg.norm(pts[i] - pts[j], axis=1)
    edge = np.array([g.has_edge(a, b) for a, b in zip(i, j)])
    if np.any(edge & (d >= SQRT2)) or np.any(~edge & (d <= SQRT2)):
        raise MarginCollapse("an edge/non-edge ended on the wrong side of sqrt(2)")
    margin = float(np.min(np.abs(d - SQRT2)))
    if margin < target_margin:
        raise MarginCollapse(f"margin {margin:.3e} below target {target_margin:.1e}")
    return Embedding(pts, margin)
