"""
Round-robin schedule types and their JSON form.

A Schedule is an ordered list of Phases. In a phase, the active nodes send
their backup state to their targets, and each (active, target) edge carries
the share of the target's memory granted to that active node.

Example JSON:
    {
      "algorithm": "efficient-vm",
      "memory": "1",
      "totalRounds": 7,
      "phases": [
        {"index": 0, "active": [1, 4], "edges": [[1, 2], [4, 3]],
         "shares": [[1, 2, "1"], [4, 3, "1"]]}
      ]
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Mapping

from ..core.errors import GraphFormatError
from ..core.graph import NodeId

BackupEdge = tuple[NodeId, NodeId]


class Algorithm(str, Enum):
    EFFICIENT_VM = "efficient-vm"
    EXTENDED_VM = "extended-vm"


def parse_fraction(value: Any) -> Fraction:
    """Exact rational from "p/q", an int, or a Fraction."""
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise GraphFormatError(f"not an exact rational: {value!r}") from None


@dataclass(frozen=True)
class Phase:
    """
    One round of the round-robin.

    shares[(v, u)] is the part of u's memory that u grants to active node v.
    """
    index: int
    active: tuple[NodeId, ...]
    edges: tuple[BackupEdge, ...]
    shares: Mapping[BackupEdge, Fraction] = field(default_factory=dict)

    def targets_of(self, v: NodeId) -> list[NodeId]:
        return [u for (w, u) in self.edges if w == v]

    def selectors_of(self) -> dict[NodeId, list[NodeId]]:
        """Target -> active nodes that selected it in this phase."""
        out: dict[NodeId, list[NodeId]] = {}
        for v, u in self.edges:
            out.setdefault(u, []).append(v)
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "active": list(self.active),
            "edges": [[v, u] for v, u in self.edges],
            "shares": [[v, u, str(self.shares[(v, u)])] for v, u in self.edges],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Phase":
        try:
            edges = tuple((int(v), int(u)) for v, u in data["edges"])
            shares = {(int(v), int(u)): parse_fraction(s) for v, u, s in data.get("shares", [])}
            return cls(
                index=int(data["index"]),
                active=tuple(int(v) for v in data["active"]),
                edges=edges,
                shares=shares,
            )
        except (KeyError, TypeError, ValueError) as e:
            raise GraphFormatError(f"malformed phase: {e}") from None


@dataclass(frozen=True)
class Schedule:
    """Phases in execution order, with the total round count."""
    algorithm: Algorithm
    phases: tuple[Phase, ...]
    memory: Fraction
    total_rounds: int

    def active_phase(self) -> dict[NodeId, int]:
        """Node -> position of the (first) phase in which it is active."""
        out: dict[NodeId, int] = {}
        for position, phase in enumerate(self.phases):
            for v in phase.active:
                out.setdefault(v, position)
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "algorithm": self.algorithm.value,
            "memory": str(self.memory),
            "totalRounds": self.total_rounds,
            "phases": [phase.to_dict() for phase in self.phases],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Schedule":
        """
        Raises:
            GraphFormatError: not a schedule document
        """
        try:
            data = json.loads(text)
            return cls(
                algorithm=Algorithm(data["algorithm"]),
                phases=tuple(Phase.from_dict(p) for p in data["phases"]),
                memory=parse_fraction(data["memory"]),
                total_rounds=int(data["totalRounds"]),
            )
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise GraphFormatError(f"malformed schedule: {e}") from None
