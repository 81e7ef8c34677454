"""
Pydantic models for exported artifacts.

These are the shapes written to and read from JSON files; the in-memory
algorithms use them directly so what is computed is what is exported.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from pydantic import BaseModel, ConfigDict, Field

from .errors import ValidationError

if TYPE_CHECKING:
    from .graph import Graph


class StructuralReport(BaseModel):
    """Degrees, size and exact neighborhood independence c = I(G)."""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    max_degree: int = Field(alias="maxDegree")
    min_degree: int = Field(alias="minDegree")
    neighborhood_independence: int = Field(alias="neighborhoodIndependence")
    node_count: int = Field(alias="nodeCount")
    edge_count: int = Field(alias="edgeCount")


class Placement(BaseModel):
    """
    K-Backup Placement: every node's ordered list of chosen backup neighbors.

    Example JSON:
        {"k": 1, "choices": {"1": [2], "2": [3], "3": [4], "4": [1]}}
    """
    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1)
    choices: dict[int, tuple[int, ...]]

    def problems(self, graph: "Graph") -> list[str]:
        """All invariant violations of this placement against graph."""
        errors: list[str] = []
        for v in graph.sorted_nodes():
            if v not in self.choices:
                errors.append(f"node {v}: no choice list")
                continue
            chosen = self.choices[v]
            expected = min(self.k, graph.degree(v))
            if len(chosen) != expected:
                errors.append(f"node {v}: {len(chosen)} choices, expected {expected}")
            if len(set(chosen)) != len(chosen):
                errors.append(f"node {v}: duplicate choice in {list(chosen)}")
            for u in chosen:
                if u == v:
                    errors.append(f"node {v}: chooses itself")
                elif not graph.has_edge(v, u):
                    errors.append(f"node {v}: choice {u} is not a neighbor")
        for v in sorted(self.choices):
            if v not in graph.nodes:
                errors.append(f"node {v}: not in graph")
        return errors

    def validate_for(self, graph: "Graph") -> None:
        """Raise ValidationError unless the placement is valid for graph."""
        errors = self.problems(graph)
        if errors:
            raise ValidationError(errors)

    def selected_pairs(self) -> list[tuple[int, int]]:
        """(chooser, chosen) pairs in chooser order."""
        return [(v, u) for v in sorted(self.choices) for u in self.choices[v]]
