"""
Crash-fault plans.

A plan maps nodes to the round at which they crash. From that round on the
node is never invoked and sends nothing; its neighbors stop seeing it.

CSV format:
    node,round
    3,0
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Optional, Union

import numpy as np

from ..core.errors import GraphFormatError, ParameterError, UnknownNodeError

NodeId = int


@dataclass(frozen=True)
class FaultPlan:
    """Crash schedule consumed by the engine."""
    crashes: Mapping[NodeId, int] = field(default_factory=dict)

    def crash_round(self, node: NodeId) -> Optional[int]:
        return self.crashes.get(node)

    def crashed_by(self, round_number: int) -> frozenset[NodeId]:
        """Nodes crashed at or before round_number."""
        return frozenset(v for v, r in self.crashes.items() if r <= round_number)

    def nodes(self) -> frozenset[NodeId]:
        return frozenset(self.crashes)

    def check_nodes(self, nodes: Iterable[NodeId]) -> None:
        known = set(nodes)
        for v in sorted(self.crashes):
            if v not in known:
                raise UnknownNodeError(v, context="graph (fault plan)")

    def dump(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["node", "round"])
        for v in sorted(self.crashes):
            writer.writerow([v, self.crashes[v]])
        return buffer.getvalue()

    @classmethod
    def sample(
        cls,
        nodes: Iterable[NodeId],
        probability: float,
        seed: int,
        round_number: int = 0,
    ) -> "FaultPlan":
        """Crash each node independently with the given probability (PCG64 stream)."""
        if not (0 <= probability <= 1):
            raise ParameterError(f"crash probability must be in [0, 1], got {probability}")
        ordered = sorted(nodes)
        draws = np.random.default_rng(seed).random(len(ordered))
        return cls({v: round_number for v, x in zip(ordered, draws.tolist()) if x < probability})


def fault_plan(crashes: Iterable[tuple[NodeId, int]]) -> FaultPlan:
    """
    Build a plan from (node, round) pairs.

    Raises:
        ParameterError: negative round, non-positive node, or a node listed twice
    """
    plan: dict[NodeId, int] = {}
    for node, round_number in crashes:
        if node < 1:
            raise ParameterError(f"node IDs must be positive, got {node}")
        if round_number < 0:
            raise ParameterError(f"crash round must be >= 0, got {round_number} for node {node}")
        if node in plan:
            raise ParameterError(f"duplicate crash entry for node {node}")
        plan[node] = round_number
    return FaultPlan(plan)


def load_fault_plan(source: Union[Path, str]) -> FaultPlan:
    """Read a `node,round` CSV file."""
    text = Path(source).read_text(encoding="utf-8")
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    if not rows or [c.strip() for c in rows[0]] != ["node", "round"]:
        raise GraphFormatError("fault plan header must be node,round", 1)
    pairs = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        try:
            node, round_number = (int(c) for c in row)
        except ValueError:
            raise GraphFormatError(f"expected 'node,round', got {row}", lineno) from None
        pairs.append((node, round_number))
    return fault_plan(pairs)
