from .dense import CELL_DIAMETER_FACTOR, CellReport, cell_two_colouring
from .grid import GridParams, grid_colouring, grid_palette_bound
from .hexagonal import CYLINDER_LATTICE, CylinderReport, HexLattice, hex_cell_of, hex_colouring_R3
from .strip import (
    StrictOrder,
    StripParams,
    StripReport,
    strip_cocomparability_order,
    strip_colouring,
)

__all__ = [
    "CELL_DIAMETER_FACTOR",
    "CYLINDER_LATTICE",
    "CellReport",
    "CylinderReport",
    "GridParams",
    "HexLattice",
    "StrictOrder",
    "StripParams",
    "StripReport",
    "cell_two_colouring",
    "grid_colouring",
    "grid_palette_bound",
    "hex_cell_of",
    "hex_colouring_R3",
    "strip_cocomparability_order",
    "strip_colouring",
]
