"""
Scheduling module - round-robin virtual-memory schedules and their ledger.

Usage:
    from backplace.scheduling import efficient_vm, extended_vm, ledger_report

    result = extended_vm(graph, r=4)
    summary = ledger_report(result.ledger)
"""

from .checks import check_ledger, check_schedule
from .efficient import EfficientVMResult, efficient_vm, phase_bound
from .extended import ExtendedVMResult, build_phase, extended_vm
from .ledger import DEFAULT_MEMORY, LedgerSummary, MemoryLedger, as_memory, ledger_report
from .types import Algorithm, BackupEdge, Phase, Schedule, parse_fraction

__all__ = [
    # Types
    "Algorithm",
    "BackupEdge",
    "Phase",
    "Schedule",
    "parse_fraction",
    # Ledger
    "DEFAULT_MEMORY",
    "LedgerSummary",
    "MemoryLedger",
    "as_memory",
    "ledger_report",
    # Algorithms
    "EfficientVMResult",
    "ExtendedVMResult",
    "build_phase",
    "efficient_vm",
    "extended_vm",
    "phase_bound",
    # Checks
    "check_ledger",
    "check_schedule",
]
