"""Hexagonal cells of the triangular lattice, and the 21-colour colouring in R^3."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..budget import DEFAULT_BUDGET, Budget
from ..exceptions import DimensionMismatch
from ..graph import Colouring, PointSet
from ._slab import colour_slab

SQRT3 = math.sqrt(3)


@dataclass(frozen=True)
class HexLattice:
    """Triangular lattice ``scale * (a p + b q)``.

    Its Voronoi cells are regular hexagons of diameter ``2 scale / sqrt 3``.
    The sublattice spanned by ``2p + q`` and ``-p + 3q`` has index 7, and the
    cell colour is the coset ``(3a + b) mod 7``. The representatives
    ``0, q, 2q, 3q, p+q, p+2q, p+3q`` get colours 0 to 6.
    """

    scale: float = 1.0
    p: tuple[float, float] = (1.0, 0.0)
    q: tuple[float, float] = (0.5, SQRT3 / 2)
    sublattice: tuple[tuple[int, int], tuple[int, int]] = ((2, 1), (-1, 3))
    representatives: tuple[tuple[int, int], ...] = field(
        default=((0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3))
    )

    @property
    def basis(self) -> np.ndarray:
        return self.scale * np.array([self.p, self.q]).T

    @property
    def cell_diameter(self) -> float:
        return 2 * self.scale / SQRT3

    def point(self, ab) -> np.ndarray:
        return np.asarray(ab, dtype=float) @ self.basis.T

    @staticmethod
    def colour(ab) -> np.ndarray:
        ab = np.asarray(ab, dtype=np.int64)
        return np.mod(3 * ab[..., 0] + ab[..., 1], 7)

    def cells(self, xy) -> tuple[np.ndarray, np.ndarray]:
        """Nearest lattice point (as integer ``(a, b)``) and its colour, per point.

        The nearest lattice point is a corner of the lattice rhombus holding
        the point, so only those 4 candidates are compared. Exact ties go to
        the lexicographically smaller ``(a, b)``.
        """
        xy = np.atleast_2d(np.asarray(xy, dtype=float))
        frac = np.linalg.solve(self.basis, xy.T).T
        base = np.floor(frac).astype(np.int64)
        best_ab = None
        best_d = None
        for da, db in ((0, 0), (0, 1), (1, 0), (1, 1)):
            ab = base + (da, db)
            diff = xy - self.point(ab)
            d = np.einsum("ij,ij->i", diff, diff)
            if best_ab is None:
                best_ab, best_d = ab, d
                continue
            # candidates are visited in increasing (a, b); strict < keeps the smaller on ties
            better = d < best_d
            best_ab = np.where(better[:, None], ab, best_ab)
            best_d = np.where(better, d, best_d)
        return best_ab, self.colour(best_ab)

    def hexagon(self, ab) -> np.ndarray:
        """The 6 corners of the cell around lattice point ``ab``."""
        centre = self.point(ab)
        rad = self.scale / SQRT3
        ang = np.pi / 6 + np.arange(6) * np.pi / 3
        return centre + rad * np.stack([np.cos(ang), np.sin(ang)], axis=1)


def hex_cell_of(point, lattice: HexLattice | None = None) -> tuple[tuple[int, int], int]:
    ab, col = (lattice or HexLattice()).cells(np.asarray(point, dtype=float)[None, :2])
    return (int(ab[0, 0]), int(ab[0, 1])), int(col[0])


CYLINDER_LATTICE = HexLattice(scale=0.75)


@dataclass
class CylinderReport:
    cylinders: int = 0
    three_colour_cylinders: list[tuple[int, int]] = field(default_factory=list)
    certified_cylinders: list[tuple[int, int]] = field(default_factory=list)


def hex_colouring_R3(
    ps: PointSet, budget: Budget = DEFAULT_BUDGET, report: CylinderReport | None = None
) -> Colouring:
    """Clique colouring of a geometric graph in R^3 with at most 21 colours.

    The plane is cut into hexagonal cells of diameter ``sqrt(3)/2`` and the
    cells are 7-coloured so that same-coloured cells are more than 1.1 apart.
    Each vertical cylinder over a cell is a co-comparability graph under
    ``z``. It takes at most 3 colours, which are tagged by the cell colour.
    """
    if ps.dim != 3:
        raise DimensionMismatch(f"hex requires dimension 3, got {ps.dim}")
    pts = ps.points / ps.radius
    if not len(pts):
        return Colouring(())
    ab, cell_colour = CYLINDER_LATTICE.cells(pts[:, :2])
    keys = np.unique(ab, axis=0, return_inverse=True)[1].ravel()
    order = np.argsort(keys, kind="stable")
    cuts = np.nonzero(np.diff(keys[order]))[0] + 1
    colours = np.zeros(len(pts), dtype=np.int64)
    report = report if report is not None else CylinderReport()
    for members in np.split(order, cuts):
        cell = (int(ab[members[0], 0]), int(ab[members[0], 1]))
        res = colour_slab(pts[members], 2, budget)
        report.cylinders += 1
        if res.n_colours > 2:
            report.three_colour_cylinders.append(cell)
        if res.method == "certified":
            report.certified_cylinders.append(cell)
        colours[members] = 3 * cell_colour[members] + res.colours
    return Colouring(tuple(colours.tolist()))
