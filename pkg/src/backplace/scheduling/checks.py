"""
Schedule and ledger invariants, re-checked from artifacts.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from ..coloring.types import Coloring, SuperClassPartition
from ..core.graph import Graph
from ..core.models import Placement
from .ledger import MemoryLedger
from .types import Algorithm, Schedule


def check_schedule(
    graph: Graph,
    schedule: Schedule,
    ledger: Optional[MemoryLedger] = None,
    placement: Optional[Placement] = None,
    coloring: Optional[Coloring] = None,
    partition: Optional[SuperClassPartition] = None,
) -> list[str]:
    """
    Every violated schedule invariant, as readable messages.

    Always checked: each node active exactly once, backup edges between
    adjacent nodes leaving an active node, no target granting more than M in
    one phase, and (with a ledger) ledger sums. Efficient-VM adds per-phase
    exclusivity and, with a placement, targets equal to the node's choices.
    Extended-VM with coloring and partition adds super-class membership.
    """
    problems: list[str] = []
    memory = schedule.memory

    seen: dict[int, int] = {}
    for phase in schedule.phases:
        for v in phase.active:
            if v not in graph.nodes:
                problems.append(f"phase {phase.index}: active node {v} not in graph")
            seen[v] = seen.get(v, 0) + 1
    for v in graph.sorted_nodes():
        if seen.get(v, 0) != 1:
            problems.append(f"node {v}: active in {seen.get(v, 0)} phases, expected 1")

    for phase in schedule.phases:
        active = set(phase.active)
        granted: dict[int, Fraction] = {}
        for v, u in phase.edges:
            if v not in active:
                problems.append(f"phase {phase.index}: edge {v}->{u} leaves inactive node {v}")
            if v not in graph.nodes or not graph.has_edge(v, u):
                problems.append(f"phase {phase.index}: edge {v}->{u} is not a graph edge")
            share = phase.shares.get((v, u))
            if share is None or share < 0:
                problems.append(f"phase {phase.index}: edge {v}->{u} has no valid share")
                continue
            granted[u] = granted.get(u, Fraction(0)) + share
        for u, total in sorted(granted.items()):
            if total > memory:
                problems.append(f"phase {phase.index}: target {u} grants {total} > M={memory}")

        if schedule.algorithm is Algorithm.EFFICIENT_VM:
            for u, selectors in sorted(phase.selectors_of().items()):
                if len(selectors) > 1:
                    problems.append(
                        f"phase {phase.index}: target {u} shared by active nodes {sorted(selectors)}"
                    )
            if placement is not None:
                for v in phase.active:
                    if sorted(phase.targets_of(v)) != sorted(placement.choices.get(v, ())):
                        problems.append(f"phase {phase.index}: node {v} targets differ from its choices")

        if schedule.algorithm is Algorithm.EXTENDED_VM and coloring and partition:
            classes = {partition.class_of.get(coloring.colors.get(v, -1)) for v in phase.active}
            if len(classes) > 1:
                problems.append(f"phase {phase.index}: active nodes span super-classes {sorted(classes, key=repr)}")
            for v, u in phase.edges:
                if partition.class_of.get(coloring.colors.get(u, -1)) in classes:
                    problems.append(
                        f"phase {phase.index}: target {u} of {v} lies in the active super-class"
                    )

    if ledger is not None:
        problems.extend(check_ledger(schedule, ledger))
    return problems


def check_ledger(schedule: Schedule, ledger: MemoryLedger) -> list[str]:
    """Ledger entries that disagree with the shares granted by the schedule."""
    problems: list[str] = []
    if ledger.memory != schedule.memory:
        problems.append(f"ledger memory {ledger.memory} differs from schedule memory {schedule.memory}")
    expected = MemoryLedger.from_schedule(schedule).virtual_of
    for v in sorted(set(expected) | set(ledger.virtual_of)):
        if ledger.virtual_of.get(v) != expected.get(v):
            problems.append(
                f"node {v}: ledger virtual memory {ledger.virtual_of.get(v)} "
                f"differs from granted shares {expected.get(v)}"
            )
    return problems
