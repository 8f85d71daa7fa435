"""Estimator-style wrappers: colourers as clusterers, the embedding as a transformer."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .budget import DEFAULT_BUDGET
from .cliques import is_clique_colouring
from .colourers.grid import grid_colouring
from .colourers.hexagonal import CylinderReport, hex_colouring_R3
from .colourers.strip import StripParams, StripReport, strip_colouring
from .embedding import embed_graph
from .exact import clique_chromatic_number_exact
from .exceptions import DimensionMismatch
from .graph import Graph, PointSet, build_geometric_graph
from .greedy import greedy_sqrt_colouring


def check_points(X, dim: int | None = None) -> np.ndarray:
    """2-d float array of finite coordinates, optionally of a fixed dimension."""
    X = check_array(X, dtype=float, ensure_min_samples=1)
    if dim is not None and X.shape[1] != dim:
        raise DimensionMismatch(f"expected points of dimension {dim}, got {X.shape[1]}")
    return X


def check_radius(radius) -> float:
    if not isinstance(radius, (int, float, np.number)) or not radius > 0:
        raise ValueError(f"radius must be a positive number, got {radius!r}")
    return float(radius)


def check_adjacency(A) -> Graph:
    """Square symmetric 0/1 matrix with zero diagonal, as a :class:`Graph`."""
    A = check_array(A, ensure_min_samples=1)
    if A.shape[0] != A.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got {A.shape}")
    if not np.isin(A, (0, 1)).all():
        raise ValueError("adjacency matrix entries must be 0 or 1")
    if (A != A.T).any() or A.diagonal().any():
        raise ValueError("adjacency matrix must be symmetric with zero diagonal")
    return Graph.from_adjacency_matrix(A)


class _GeometricColourer(ClusterMixin, BaseEstimator):
    """Base: ``fit`` colours the geometric graph of ``X``; labels are colours."""

    _dim: int | None = None

    def _colour(self, ps: PointSet):
        raise NotImplementedError

    def fit(self, X, y=None):
        X = check_points(X, self._dim)
        ps = PointSet(X, check_radius(self.radius))
        colouring = self._colour(ps)
        self.labels_ = np.asarray(colouring.colours, dtype=np.int64)
        self.n_colours_ = colouring.palette_size
        self.n_features_in_ = X.shape[1]
        return self


class StripColouring(_GeometricColourer):
    """At most 9 colours for planar points, by horizontal strips."""

    _dim = 2

    def __init__(self, radius=1.0, strip_height=StripParams.strip_height, anchor=0.0,
                 budget=DEFAULT_BUDGET):
        self.radius = radius
        self.strip_height = strip_height
        self.anchor = anchor
        self.budget = budget

    def _colour(self, ps):
        self.report_ = StripReport()
        params = StripParams(self.strip_height, self.anchor)
        return strip_colouring(ps, params, self.budget, self.report_)


class GridColouring(_GeometricColourer):
    """At most ``2 (ceil(sqrt d) + 1)^d`` colours from hypercube cells."""

    def __init__(self, radius=1.0):
        self.radius = radius

    def _colour(self, ps):
        return grid_colouring(ps)


class HexCylinderColouring(_GeometricColourer):
    """At most 21 colours in R^3 from hexagonal cylinders."""

    _dim = 3

    def __init__(self, radius=1.0, budget=DEFAULT_BUDGET):
        self.radius = radius
        self.budget = budget

    def _colour(self, ps):
        self.report_ = CylinderReport()
        return hex_colouring_R3(ps, self.budget, self.report_)


class CliqueColouring(ClusterMixin, BaseEstimator):
    """Exact or greedy clique colouring of a graph given by points or adjacency.

    With ``affinity="euclidean"`` the rows of ``X`` are points joined at
    distance ``radius``. With ``affinity="precomputed"``, ``X`` is a 0/1
    adjacency matrix.
    """

    def __init__(self, method="exact", affinity="euclidean", radius=1.0, budget=DEFAULT_BUDGET):
        self.method = method
        self.affinity = affinity
        self.radius = radius
        self.budget = budget

    def fit(self, X, y=None):
        if self.method not in ("exact", "greedy"):
            raise ValueError(f"method must be 'exact' or 'greedy', got {self.method!r}")
        if self.affinity == "precomputed":
            g = check_adjacency(X)
        elif self.affinity == "euclidean":
            X = check_points(X)
            g = build_geometric_graph(PointSet(X, check_radius(self.radius)))
        else:
            raise ValueError(f"affinity must be 'euclidean' or 'precomputed', got {self.affinity!r}")
        if self.method == "exact":
            _, colouring = clique_chromatic_number_exact(g, self.budget)
        else:
            colouring = greedy_sqrt_colouring(g)
        ok, _ = is_clique_colouring(g, colouring)
        if not ok:
            raise AssertionError("colouring failed verification")
        self.graph_ = g
        self.labels_ = np.asarray(colouring.colours, dtype=np.int64)
        self.n_colours_ = colouring.palette_size
        self.n_features_in_ = np.shape(X)[1]
        return self


class GeometricEmbedding(TransformerMixin, BaseEstimator):
    """Points whose geometric graph at threshold ``sqrt 2`` is the input graph.

    ``fit`` takes a 0/1 adjacency matrix; ``transform`` embeds the matrix it
    is given, so ``fit_transform(A)`` returns the points for ``A``.
    """

    def __init__(self, target_margin=1e-9, reduce=False):
        self.target_margin = target_margin
        self.reduce = reduce

    def fit(self, X, y=None):
        g = check_adjacency(X)
        self.embedding_ = embed_graph(g, self.target_margin, self.reduce)
        self.margin_ = self.embedding_.margin
        self.n_features_in_ = g.n
        return self

    def transform(self, X):
        check_is_fitted(self, "embedding_")
        g = check_adjacency(X)
        if g.n != self.n_features_in_:
            raise ValueError(f"expected a {self.n_features_in_}-vertex graph, got {g.n}")
        return embed_graph(g, self.target_margin, self.reduce).points
