"""Two-colouring of dense geometric graphs from well-filled hexagonal cells.

Suppose every hexagonal cell of diameter ``delta`` holds both colours, and
``sqrt(3)/2 * r + delta <= r``. Then every maximal clique contains the whole
cell around the midpoint of its diameter, so it sees both colours.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..graph import Colouring, PointSet
from .hexagonal import HexLattice

# r >= 4 delta (1 + sqrt(3)/2) is the same condition as delta <= r (1 - sqrt(3)/2)
CELL_DIAMETER_FACTOR = 1 - math.sqrt(3) / 2


@dataclass(frozen=True)
class CellReport:
    cell_diameter: float
    cells_in_window: int
    deficient_cells: int  # cells centred in the window holding fewer than 2 points
    min_occupied: int

    @property
    def cell_condition(self) -> bool:
        return self.deficient_cells == 0


def cell_two_colouring(
    ps: PointSet, cell_diameter: float | None = None, window=None
) -> tuple[Colouring, CellReport]:
    """Alternate two colours inside every hexagonal cell.

    ``cell_diameter`` defaults to the largest value the argument allows,
    ``r (1 - sqrt(3)/2)``. ``window`` is ``(lo, hi)`` corner arrays for
    counting cells (default: the bounding box). A cell counts when its
    centre lies in the window.
    """
    if ps.dim != 2:
        raise ValueError("cell two-colouring is planar")
    delta = cell_diameter or ps.radius * CELL_DIAMETER_FACTOR
    lattice = HexLattice(scale=delta * math.sqrt(3) / 2)
    pts = ps.points
    ab, _ = lattice.cells(pts)
    uniq, inverse, counts = np.unique(ab, axis=0, return_inverse=True, return_counts=True)
    inverse = inverse.ravel()
    order = np.argsort(inverse, kind="stable")
    rank = np.empty(len(pts), dtype=np.int64)
    starts = np.concatenate([[0], np.cumsum(counts)[:-1]])
    rank[order] = np.arange(len(pts)) - np.repeat(starts, counts)
    colours = rank % 2

    lo, hi = (pts.min(axis=0), pts.max(axis=0)) if window is None else map(np.asarray, window)
    corners = np.array([[lo[0], lo[1]], [lo[0], hi[1]], [hi[0], lo[1]], [hi[0], hi[1]]])
    span = np.linalg.solve(lattice.basis, corners.T).T
    a0, b0 = np.floor(span.min(axis=0)).astype(int) - 1
    a1, b1 = np.ceil(span.max(axis=0)).astype(int) + 1
    grid = np.stack(np.meshgrid(np.arange(a0, a1 + 1), np.arange(b0, b1 + 1)), -1).reshape(-1, 2)
    centres = lattice.point(grid)
    inside = ((centres >= lo) & (centres < hi)).all(axis=1)
    occupancy = dict(zip(map(tuple, uniq.tolist()), counts.tolist()))
    window_counts = [occupancy.get(tuple(c), 0) for c in grid[inside].tolist()]
    report = CellReport(
        cell_diameter=delta,
        cells_in_window=len(window_counts),
        deficient_cells=sum(c < 2 for c in window_counts),
        min_occupied=int(counts.min()) if len(counts) else 0,
    )
    return Colouring(tuple(colours.tolist())), report
