"""
Core module - graph representation, generators, analyses and errors.
"""

from __future__ import annotations

from .analysis import (
    DEFAULT_NEIGHBORHOOD_CAP,
    DEFAULT_SEARCH_BUDGET,
    local_independence,
    neighborhood_independence,
    selection_subgraph,
    square_graph,
    structural_report,
)
from .edgelist import (
    dump_edge_list,
    dump_layout_csv,
    load_edge_list,
    load_layout_csv,
    read_edge_list,
)
from .errors import (
    BackplaceError,
    BandwidthError,
    DuplicateEdgeError,
    GraphFormatError,
    IndependenceTooLargeError,
    IsolatedNodeError,
    OracleError,
    ParameterError,
    ProtocolError,
    RoundLimitError,
    SearchSpaceError,
    SelfLoopError,
    SimulationError,
    UnknownNodeError,
    ValidationError,
)
from .generators import (
    DEFAULT_MIN_DEGREE_FRACTION,
    GeometricLayout,
    generate_bounded_growth,
    generate_complete,
    generate_cycle,
    generate_path,
    generate_star,
    generate_udg,
    udg_from_positions,
)
from .graph import Graph, NodeId
from .models import Placement, StructuralReport

__all__ = [
    # Graph
    "Graph",
    "NodeId",
    "GeometricLayout",
    # Models
    "Placement",
    "StructuralReport",
    # Generators
    "DEFAULT_MIN_DEGREE_FRACTION",
    "generate_bounded_growth",
    "generate_complete",
    "generate_cycle",
    "generate_path",
    "generate_star",
    "generate_udg",
    "udg_from_positions",
    # Analyses
    "DEFAULT_NEIGHBORHOOD_CAP",
    "DEFAULT_SEARCH_BUDGET",
    "local_independence",
    "neighborhood_independence",
    "selection_subgraph",
    "square_graph",
    "structural_report",
    # Files
    "dump_edge_list",
    "dump_layout_csv",
    "load_edge_list",
    "load_layout_csv",
    "read_edge_list",
    # Errors
    "BackplaceError",
    "BandwidthError",
    "DuplicateEdgeError",
    "GraphFormatError",
    "IndependenceTooLargeError",
    "IsolatedNodeError",
    "OracleError",
    "ParameterError",
    "ProtocolError",
    "RoundLimitError",
    "SearchSpaceError",
    "SelfLoopError",
    "SimulationError",
    "UnknownNodeError",
    "ValidationError",
]
