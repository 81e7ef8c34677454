"""
Placement validation, load accounting and survivability.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Mapping

from ..core.graph import Graph, NodeId
from ..core.models import Placement


def validate_placement(graph: Graph, placement: Placement) -> None:
    """Raise ValidationError listing every placement problem."""
    placement.validate_for(graph)


@dataclass(frozen=True)
class LoadReport:
    """
    Backup load per node.

    loads[j] is b_j, the number of nodes that chose j. c_times_k is the
    K-Next-Modulo worst-case bound for the graph's exact independence c.
    """
    loads: Mapping[NodeId, int]
    max_load: int
    c_times_k: int

    @property
    def within_bound(self) -> bool:
        return self.max_load <= self.c_times_k

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["node", "load"])
        for v in sorted(self.loads):
            writer.writerow([v, self.loads[v]])
        return buffer.getvalue()


def compute_loads(graph: Graph, placement: Placement, c: int) -> LoadReport:
    """
    Exact b_j for every node.

    Raises:
        ValidationError: placement invalid for graph
    """
    placement.validate_for(graph)
    loads = {v: 0 for v in graph.sorted_nodes()}
    for _, u in placement.selected_pairs():
        loads[u] += 1
    return LoadReport(
        loads=loads,
        max_load=max(loads.values(), default=0),
        c_times_k=c * placement.k,
    )


def survivability(
    graph: Graph,
    placement: Placement,
    crashed: Iterable[NodeId],
) -> dict[NodeId, int]:
    """Surviving backups per live node."""
    placement.validate_for(graph)
    down = set(crashed)
    return {
        v: sum(1 for u in placement.choices[v] if u not in down)
        for v in graph.sorted_nodes()
        if v not in down
    }


def backup_coverage(survival: Mapping[NodeId, int]) -> float:
    """Fraction of live nodes that still have at least one backup."""
    if not survival:
        return 0.0
    return sum(1 for count in survival.values() if count > 0) / len(survival)
