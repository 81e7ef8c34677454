"""
Efficient-VM: one phase per color class of a 2-hop coloring of G'.

1. K-Next-Modulo gives the placement and the selection subgraph G'.
2. A distance-2 coloring of G' separates any two nodes that share a target.
3. Color classes take turns; in its phase a node owns the full memory of
   each of its K targets, so its virtual memory is K·M.

Usage:
    result = efficient_vm(graph, k=2)
    result.ledger.gain_of[v]   # == 2 for every v
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from ..coloring.linial import linial_color_bound
from ..coloring.square import distance2_coloring
from ..coloring.types import Coloring
from ..core.analysis import selection_subgraph
from ..core.errors import ParameterError
from ..core.graph import Graph
from ..core.models import Placement
from ..placement.modulo import run_kbp
from ..runtime.engine import DEFAULT_BANDWIDTH_FACTOR, DEFAULT_MAX_ROUNDS, RunResult
from .ledger import DEFAULT_MEMORY, MemoryLedger, as_memory
from .types import Algorithm, Phase, Schedule

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EfficientVMResult:
    schedule: Schedule
    ledger: MemoryLedger
    coloring: Coloring
    placement: Placement
    selection_graph: Graph
    placement_run: RunResult


def efficient_vm(
    graph: Graph,
    k: int,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    memory: Any = DEFAULT_MEMORY,
    bandwidth_factor: int = DEFAULT_BANDWIDTH_FACTOR,
) -> EfficientVMResult:
    """
    Build the Efficient-VM schedule.

    total_rounds = placement rounds + coloring rounds + number of phases.

    Raises:
        ParameterError: k < 1 or min degree below k
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if not graph.nodes:
        raise ParameterError("empty graph")
    if graph.min_degree < k:
        raise ParameterError(f"Efficient-VM needs min degree >= k, got δ={graph.min_degree}, k={k}")
    m = as_memory(memory)

    placement, run = run_kbp(graph, k, bandwidth_factor=bandwidth_factor, max_rounds=max_rounds)
    selected = selection_subgraph(graph, placement)
    coloring = distance2_coloring(
        selected, max_rounds=max_rounds, id_space=graph.max_id, bandwidth_factor=bandwidth_factor
    )

    phases = []
    for color, members in coloring.classes().items():
        edges = tuple((v, u) for v in members for u in placement.choices[v])
        phases.append(
            Phase(
                index=color,
                active=tuple(members),
                edges=edges,
                shares={edge: m for edge in edges},
            )
        )

    schedule = Schedule(
        algorithm=Algorithm.EFFICIENT_VM,
        phases=tuple(phases),
        memory=m,
        total_rounds=run.rounds_used + coloring.rounds_used + len(phases),
    )
    ledger = MemoryLedger.from_schedule(schedule)
    logger.info(
        f"Efficient-VM (k={k}): {len(phases)} phase(s), {schedule.total_rounds} round(s), "
        f"virtual memory {k * m} per node"
    )
    return EfficientVMResult(
        schedule=schedule,
        ledger=ledger,
        coloring=coloring,
        placement=placement,
        selection_graph=selected,
        placement_run=run,
    )


def phase_bound(c: int, k: int) -> int:
    """Upper bound on Efficient-VM phases: the palette of a 2-hop coloring of G'."""
    delta = c * k + k
    return linial_color_bound(delta * delta + delta)
