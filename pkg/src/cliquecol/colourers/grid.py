"""Hypercube-cell clique colouring in R^d with at most 2 (ceil(sqrt d) + 1)^d colours."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..graph import Colouring, PointSet


def ceil_sqrt(d: int) -> int:
    return math.isqrt(d - 1) + 1 if d > 0 else 0


@dataclass(frozen=True)
class GridParams:
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be at least 1")

    @property
    def k(self) -> int:
        return ceil_sqrt(self.dim)

    @property
    def cell_side(self) -> float:
        return 1.0 / self.k

    @property
    def families(self) -> int:
        return (self.k + 1) ** self.dim

    @property
    def palette_bound(self) -> int:
        return 2 * self.families

    def cells(self, points: np.ndarray) -> np.ndarray:
        """Integer cell index ``z`` with ``x`` in ``[0, s)^d + s z``."""
        return np.floor(np.asarray(points) / self.cell_side).astype(np.int64)

    def family_offset(self, cells: np.ndarray) -> np.ndarray:
        """Offset ``y`` in ``{0..k}^d`` naming the translate family of each cell."""
        return np.mod(cells, self.k + 1)

    def family_id(self, cells: np.ndarray) -> np.ndarray:
        y = self.family_offset(cells)
        base = self.k + 1
        return y @ (base ** np.arange(self.dim - 1, -1, -1, dtype=np.int64))


def grid_palette_bound(dim: int) -> int:
    return GridParams(dim).palette_bound


def grid_colouring(ps: PointSet) -> Colouring:
    """Each translate family of cells gets its own pair of colours.

    Cells have diameter at most 1, so each is a clique, and distinct cells of
    one family are more than 1 apart. In every cell the lexicographically
    smallest point takes the family's first colour and the rest the second.
    A maximal clique of the second colour then extends by that first point.
    """
    pts = ps.points / ps.radius
    if not len(pts):
        return Colouring(())
    params = GridParams(ps.dim)
    cells = params.cells(pts)
    fam = params.family_id(cells)
    # lexicographic by cell, then by coordinates, then by index
    keys = [np.arange(len(pts))] + [pts[:, c] for c in reversed(range(ps.dim))]
    keys += [cells[:, c] for c in reversed(range(ps.dim))]
    order = np.lexsort(keys)
    sc = cells[order]
    first = np.ones(len(pts), dtype=bool)
    first[1:] = (sc[1:] != sc[:-1]).any(axis=1)
    second = np.empty(len(pts), dtype=np.int64)
    second[order] = ~first
    return Colouring(tuple((2 * fam + second).tolist()))
