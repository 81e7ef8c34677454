"""
Extended-VM: R phases over super-classes of a (Δ+1)-coloring.

In phase s the nodes whose color falls in super-class s are active. Each
active node targets every neighbor outside super-class s, and each target
splits its memory equally among the active nodes that target it. Shares
reset between phases.

Usage:
    result = extended_vm(graph, r=4)
    result.ledger.gain_of
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from ..coloring.reduction import delta_plus_one_coloring
from ..coloring.superclass import partition_super_classes
from ..coloring.types import Coloring, SuperClassPartition
from ..coloring.verify import coloring_conflicts
from ..core.errors import ParameterError, ValidationError
from ..core.graph import Graph, NodeId
from ..runtime.engine import DEFAULT_BANDWIDTH_FACTOR, DEFAULT_MAX_ROUNDS
from .ledger import DEFAULT_MEMORY, MemoryLedger, as_memory
from .types import Algorithm, Phase, Schedule

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtendedVMResult:
    schedule: Schedule
    ledger: MemoryLedger
    coloring: Coloring
    partition: SuperClassPartition

    @property
    def starved_nodes(self) -> list[NodeId]:
        """Nodes whose neighbors all share their super-class."""
        return [v for v, amount in self.ledger.virtual_of.items() if amount == 0]


def _check_instance(graph: Graph, r: int) -> None:
    if not graph.nodes:
        raise ParameterError("empty graph")
    if not 1 <= r < graph.max_degree:
        raise ParameterError(f"R must satisfy 1 <= R < Δ={graph.max_degree}, got {r}")
    if graph.min_degree < 1:
        raise ParameterError(f"Extended-VM needs min degree >= 1, got {graph.min_degree}")
    if not graph.is_connected():
        raise ParameterError("Extended-VM needs a connected graph")


def build_phase(
    graph: Graph,
    coloring: Coloring,
    partition: SuperClassPartition,
    super_class: int,
    memory: Fraction,
) -> Phase:
    """Active nodes, targets and equal shares for one super-class."""
    in_class = {
        v for v in graph.sorted_nodes() if partition.class_of[coloring.colors[v]] == super_class
    }
    active = tuple(sorted(in_class))
    edges = tuple((v, u) for v in active for u in graph.neighbors(v) if u not in in_class)
    selectors: dict[NodeId, int] = {}
    for _, u in edges:
        selectors[u] = selectors.get(u, 0) + 1
    shares = {(v, u): memory / selectors[u] for v, u in edges}
    return Phase(index=super_class, active=active, edges=edges, shares=shares)


def extended_vm(
    graph: Graph,
    r: int,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    memory: Any = DEFAULT_MEMORY,
    coloring: Optional[Coloring] = None,
    bandwidth_factor: int = DEFAULT_BANDWIDTH_FACTOR,
) -> ExtendedVMResult:
    """
    Build the Extended-VM schedule.

    Args:
        graph: Connected network with min degree >= 1
        r: Number of super-classes, 1 <= r < Δ
        max_rounds: Engine round limit for the coloring
        memory: Physical memory M per node
        coloring: Proper 1-hop coloring to use instead of computing one
        bandwidth_factor: CONGEST bandwidth factor

    total_rounds = coloring.rounds_used + r; all r phases are kept, empty or not.

    Raises:
        ParameterError: r out of range, disconnected graph or isolated node
        ValidationError: the supplied coloring is not proper
    """
    _check_instance(graph, r)
    m = as_memory(memory)
    if coloring is None:
        coloring = delta_plus_one_coloring(
            graph, max_rounds=max_rounds, bandwidth_factor=bandwidth_factor
        )
    else:
        problems = coloring_conflicts(graph, coloring)
        if problems:
            raise ValidationError(problems)
    partition = partition_super_classes(coloring.color_count, r)

    phases = tuple(build_phase(graph, coloring, partition, s, m) for s in range(r))
    schedule = Schedule(
        algorithm=Algorithm.EXTENDED_VM,
        phases=phases,
        memory=m,
        total_rounds=coloring.rounds_used + r,
    )
    result = ExtendedVMResult(
        schedule=schedule,
        ledger=MemoryLedger.from_schedule(schedule),
        coloring=coloring,
        partition=partition,
    )
    starved = result.starved_nodes
    if starved:
        logger.warning(
            f"Extended-VM (R={r}): {len(starved)} node(s) have no target outside "
            f"their super-class: {starved[:10]}"
        )
    logger.info(
        f"Extended-VM (R={r}): {coloring.color_count} colors, "
        f"{partition.colors_per_class} per super-class, {schedule.total_rounds} round(s)"
    )
    return result
