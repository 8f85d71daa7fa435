"""Clique colourings of geometric graphs and random geometric graph experiments."""
from .budget import DEFAULT_BUDGET, Budget
from .census import ComponentCensus, component_census, find_triangle_free_c5
from .certificate import Certificate, certify_clique_colouring
from .cliques import enumerate_maximal_cliques, is_clique_colouring
from .colourers import (
    GridParams,
    HexLattice,
    StripParams,
    cell_two_colouring,
    grid_colouring,
    hex_cell_of,
    hex_colouring_R3,
    strip_cocomparability_order,
    strip_colouring,
)
from .constants import PentagonConstants, pentagon_constants
from .embedding import Embedding, embed_graph
from .estimators import (
    CliqueColouring,
    GeometricEmbedding,
    GridColouring,
    HexCylinderColouring,
    StripColouring,
)
from .exact import clique_chromatic_number_exact, clique_transversal_number
from .exceptions import BudgetExceeded, DimensionMismatch, MarginCollapse, ParseError
from .exhaustive import canonical_form, exhaustive_chi_c_max, is_isomorphic
from .experiments import (
    ChiResult,
    EstimateTable,
    SweepConfig,
    chi_c_by_components,
    estimate_mu_c5,
    run_sweep,
    wilson_interval,
)
from .graph import CliqueHypergraph, Colouring, Graph, PointSet, build_geometric_graph
from .greedy import greedy_sqrt_colouring
from .rgg import RggConfig, sample_rgg

__version__ = "0.1.0"

__all__ = [
    "Budget", "BudgetExceeded", "Certificate", "ChiResult", "CliqueColouring",
    "CliqueHypergraph", "Colouring", "ComponentCensus", "DEFAULT_BUDGET",
    "DimensionMismatch", "Embedding", "EstimateTable", "GeometricEmbedding", "Graph",
    "GridColouring", "GridParams", "HexCylinderColouring", "HexLattice", "MarginCollapse",
    "ParseError", "PentagonConstants", "PointSet", "RggConfig", "StripColouring",
    "StripParams", "SweepConfig", "build_geometric_graph", "canonical_form",
    "cell_two_colouring", "certify_clique_colouring", "chi_c_by_components",
    "clique_chromatic_number_exact", "clique_transversal_number", "component_census",
    "embed_graph", "enumerate_maximal_cliques", "estimate_mu_c5", "exhaustive_chi_c_max",
    "find_triangle_free_c5", "greedy_sqrt_colouring", "grid_colouring", "hex_cell_of",
    "hex_colouring_R3", "is_clique_colouring", "is_isomorphic", "pentagon_constants",
    "run_sweep", "sample_rgg", "strip_cocomparability_order", "strip_colouring",
    "wilson_interval",
]
