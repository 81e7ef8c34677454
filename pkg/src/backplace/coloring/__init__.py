"""
Deterministic distributed colorings.

Usage:
    from backplace.coloring import delta_plus_one_coloring, partition_super_classes

    coloring = delta_plus_one_coloring(graph)
    partition = partition_super_classes(coloring.color_count, 4)
"""

from .linial import (
    LINIAL_ROUND_SLACK,
    LinialProgram,
    LinialStep,
    linial_color_bound,
    linial_coloring,
    linial_schedule,
    log_star,
    reduce_color,
)
from .reduction import EliminationProgram, delta_plus_one_coloring, reduce_to_delta_plus_one
from .square import Distance2Program, distance2_coloring
from .superclass import partition_super_classes
from .types import Coloring, SuperClassPartition
from .verify import coloring_conflicts, conflicting_pairs, verify_coloring

__all__ = [
    # Types
    "Coloring",
    "SuperClassPartition",
    # Linial
    "LINIAL_ROUND_SLACK",
    "LinialProgram",
    "LinialStep",
    "linial_color_bound",
    "linial_coloring",
    "linial_schedule",
    "log_star",
    "reduce_color",
    # Distance 2
    "Distance2Program",
    "distance2_coloring",
    # Δ + 1
    "EliminationProgram",
    "delta_plus_one_coloring",
    "reduce_to_delta_plus_one",
    # Super-classes
    "partition_super_classes",
    # Checks
    "coloring_conflicts",
    "conflicting_pairs",
    "verify_coloring",
]
