"""Sufficient geometric certificate that a colouring of a geometric graph is valid.

Let ``K`` be a maximal clique with at least two vertices, and let its
diameter ``D`` be attained by ``u, v``. Every vertex of ``K`` lies within
``sqrt(3)/2 * D`` of the midpoint ``m`` of ``uv``. So every point within
``r - sqrt(3)/2 * D`` of ``m`` is adjacent to all of ``K`` and, by
maximality, belongs to ``K``. If that ball holds two colours for every edge
``uv``, no maximal clique is monochromatic. The argument holds in any
dimension, and it only needs ball queries, never clique enumeration.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .graph import candidate_pair_count, geometric_pairs, pairwise_distances

HALF_SQRT3 = math.sqrt(3) / 2
DIRECT_EDGE_LIMIT = 200_000


@dataclass(frozen=True)
class Certificate:
    certified: bool
    edges_checked: int
    failed_edge: tuple[int, int] | None = None


def _two_colours(tree: cKDTree, colours: np.ndarray, centres: np.ndarray, radii) -> np.ndarray:
    hits = tree.query_ball_point(centres, radii)
    return np.array([len(h) > 1 and colours[h].min() != colours[h].max() for h in hits], dtype=bool)


def _check_edges(tree, points, colours, r, pairs) -> tuple[int, int] | None:
    if not len(pairs):
        return None
    a, b = points[pairs[:, 0]], points[pairs[:, 1]]
    mid = (a + b) / 2
    radii = r - HALF_SQRT3 * pairwise_distances(a, b)
    ok = _two_colours(tree, colours, mid, radii)
    if ok.all():
        return None
    i = int(np.argmin(ok))
    return int(pairs[i, 0]), int(pairs[i, 1])


def certify_clique_colouring(points, radius: float, colours, step: float | None = None) -> Certificate:
    """Check the two-colour ball condition for every edge of the geometric graph.

    Small inputs are checked edge by edge. Larger ones are checked on a grid
    of cell side ``step`` over the bounding box first: a cell passes if a
    shrunken ball at its centre, which sits inside the ball of every edge
    whose midpoint falls in the cell, already holds two colours. Only edges
    with midpoints in failing cells are then checked individually.

    ``certified=False`` does not prove the colouring invalid.
    """
    points = np.asarray(points, dtype=float)
    colours = np.asarray(colours)
    n, dim = points.shape
    if n < 2:
        return Certificate(True, 0)
    tree = cKDTree(points)
    r = float(radius)

    if candidate_pair_count(points, r) <= DIRECT_EDGE_LIMIT:
        pairs = geometric_pairs(points, r)
        bad = _check_edges(tree, points, colours, r, pairs)
        return Certificate(bad is None, len(pairs), bad)

    rho = r * (1 - HALF_SQRT3)
    step = step or rho / 2
    inner = rho - step * math.sqrt(dim) / 2
    if inner <= 0:
        raise ValueError("grid step too coarse for the certificate")
    lo, hi = points.min(axis=0), points.max(axis=0)
    shape = np.maximum(1, np.ceil((hi - lo) / step).astype(np.int64))
    idx = np.indices(shape).reshape(dim, -1).T
    centres = lo + (idx + 0.5) * step
    good = _two_colours(tree, colours, centres, inner)
    checked = 0
    reach = r / 2 + step * math.sqrt(dim) / 2
    for cell in np.nonzero(~good)[0]:
        near = np.array(tree.query_ball_point(centres[cell], reach), dtype=np.int64)
        if len(near) < 2:
            continue
        local = geometric_pairs(points[near], r)
        if not len(local):
            continue
        pairs = near[local]
        mid = (points[pairs[:, 0]] + points[pairs[:, 1]]) / 2
        home = np.minimum(np.floor((mid - lo) / step).astype(np.int64), shape - 1)
        pairs = pairs[(home == idx[cell]).all(axis=1)]
        checked += len(pairs)
        bad = _check_edges(tree, points, colours, r, pairs)
        if bad is not None:
            return Certificate(False, checked, bad)
    return Certificate(True, checked)
