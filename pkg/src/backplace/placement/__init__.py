"""
Placement module - K-Next-Modulo backup selection, loads, exact oracle.
"""

from __future__ import annotations

from .metrics import LoadReport, backup_coverage, compute_loads, survivability, validate_placement
from .modulo import KBPProgram, chosen_by, k_next_modulo, place_backups, run_kbp
from .oracle import (
    DEFAULT_ORACLE_NODE_CAP,
    OptimalPlacementResult,
    exhaustive_optimal,
    optimal_max_load,
)

__all__ = [
    # K-Next-Modulo
    "KBPProgram",
    "chosen_by",
    "k_next_modulo",
    "place_backups",
    "run_kbp",
    # Metrics
    "LoadReport",
    "backup_coverage",
    "compute_loads",
    "survivability",
    "validate_placement",
    # Oracle
    "DEFAULT_ORACLE_NODE_CAP",
    "OptimalPlacementResult",
    "exhaustive_optimal",
    "optimal_max_load",
]
