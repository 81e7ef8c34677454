"""
Backplace - K-backup placement and virtual-memory scheduling in CONGEST.

Every algorithm runs as a per-node program on a synchronous round engine
that enforces the CONGEST bandwidth limit:
- K-Next-Modulo backup placement (one round, load <= c·K)
- Linial, distance-2 and (Δ+1) colorings
- Efficient-VM and Extended-VM round-robin memory schedules
- An exact max-flow oracle for the optimal placement load

Usage:
    from backplace import generate_udg, run_kbp, compute_loads, neighborhood_independence

    graph, layout = generate_udg(50, 0.3, seed=42)
    placement, run = run_kbp(graph.induced(v for v in graph.nodes if graph.degree(v)), k=2)
"""

from __future__ import annotations

from .coloring import (
    Coloring,
    SuperClassPartition,
    delta_plus_one_coloring,
    distance2_coloring,
    linial_coloring,
    partition_super_classes,
    reduce_to_delta_plus_one,
    verify_coloring,
)
from .core import (
    BackplaceError,
    GeometricLayout,
    Graph,
    ParameterError,
    Placement,
    StructuralReport,
    ValidationError,
    generate_bounded_growth,
    generate_complete,
    generate_cycle,
    generate_path,
    generate_star,
    generate_udg,
    load_edge_list,
    neighborhood_independence,
    selection_subgraph,
    square_graph,
    structural_report,
)
from .placement import (
    LoadReport,
    OptimalPlacementResult,
    compute_loads,
    exhaustive_optimal,
    k_next_modulo,
    optimal_max_load,
    run_kbp,
    survivability,
    validate_placement,
)
from .runtime import FaultPlan, NodeProgram, RunResult, SynchronousEngine, fault_plan, run_synchronous
from .scheduling import (
    MemoryLedger,
    Phase,
    Schedule,
    check_schedule,
    efficient_vm,
    extended_vm,
    ledger_report,
)

__version__ = "0.1.0"

__all__ = [
    # Graphs
    "Graph",
    "GeometricLayout",
    "StructuralReport",
    "generate_bounded_growth",
    "generate_complete",
    "generate_cycle",
    "generate_path",
    "generate_star",
    "generate_udg",
    "load_edge_list",
    "neighborhood_independence",
    "selection_subgraph",
    "square_graph",
    "structural_report",
    # Engine
    "FaultPlan",
    "NodeProgram",
    "RunResult",
    "SynchronousEngine",
    "fault_plan",
    "run_synchronous",
    # Placement
    "LoadReport",
    "OptimalPlacementResult",
    "Placement",
    "compute_loads",
    "exhaustive_optimal",
    "k_next_modulo",
    "optimal_max_load",
    "run_kbp",
    "survivability",
    "validate_placement",
    # Coloring
    "Coloring",
    "SuperClassPartition",
    "delta_plus_one_coloring",
    "distance2_coloring",
    "linial_coloring",
    "partition_super_classes",
    "reduce_to_delta_plus_one",
    "verify_coloring",
    # Scheduling
    "MemoryLedger",
    "Phase",
    "Schedule",
    "check_schedule",
    "efficient_vm",
    "extended_vm",
    "ledger_report",
    # Errors
    "BackplaceError",
    "ParameterError",
    "ValidationError",
]
