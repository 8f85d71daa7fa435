"""Random geometric graphs G(n, r) on the square of area n."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .graph import Graph, PointSet, geometric_pairs, graph_from_pairs

MODELS = ("uniform", "poisson")


@dataclass(frozen=True)
class RggConfig:
    n: int
    r: float
    model: str = "uniform"
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not self.r > 0:
            raise ValueError("r must be positive")
        if self.model not in MODELS:
            raise ValueError(f"model must be one of {MODELS}, got {self.model!r}")

    @property
    def half_side(self) -> float:
        return math.sqrt(self.n) / 2


def trial_rng(seed: int, trial: int = 0) -> np.random.Generator:
    """Independent stream per ``(seed, trial)``, regardless of scheduling order."""
    return np.random.default_rng(np.random.SeedSequence([seed & (2**64 - 1), trial]))


def sample_points(cfg: RggConfig, rng: np.random.Generator) -> np.ndarray:
    """``n`` uniform points (or ``Poisson(n)`` of them) in ``[-sqrt(n)/2, sqrt(n)/2]^2``."""
    count = cfg.n if cfg.model == "uniform" else int(rng.poisson(cfg.n))
    return rng.uniform(-cfg.half_side, cfg.half_side, size=(count, 2))


def sample_rgg(cfg: RggConfig, trial: int = 0) -> tuple[PointSet, Graph]:
    pts = sample_points(cfg, trial_rng(cfg.seed, trial))
    return PointSet(pts, cfg.r), graph_from_pairs(len(pts), geometric_pairs(pts, cfg.r))


def component_labels(n: int, pairs: np.ndarray) -> np.ndarray:
    if not len(pairs):
        return np.arange(n)
    adj = coo_matrix((np.ones(len(pairs), dtype=np.int8), (pairs[:, 0], pairs[:, 1])), shape=(n, n))
    return connected_components(adj, directed=False)[1]


def split_components(n: int, pairs: np.ndarray, min_size: int = 2):
    """Yield ``(vertices, local_graph)`` for each component with ``min_size`` or more vertices."""
    labels = component_labels(n, pairs)
    sizes = np.bincount(labels)
    big = np.nonzero(sizes >= min_size)[0]
    if not len(big):
        return
    keep = np.isin(labels, big)
    verts = np.nonzero(keep)[0]
    verts = verts[np.argsort(labels[verts], kind="stable")]
    vcuts = np.nonzero(np.diff(labels[verts]))[0] + 1
    plabel = labels[pairs[:, 0]] if len(pairs) else np.empty(0, dtype=np.int64)
    psel = np.isin(plabel, big)
    epairs = pairs[psel]
    elab = plabel[psel]
    eorder = np.argsort(elab, kind="stable")
    epairs, elab = epairs[eorder], elab[eorder]
    ebounds = np.searchsorted(elab, big)
    ebounds = np.append(ebounds, len(elab))
    for c, members in enumerate(np.split(verts, vcuts)):
        local = np.searchsorted(members, epairs[ebounds[c]:ebounds[c + 1]])
        yield members, graph_from_pairs(len(members), local)
