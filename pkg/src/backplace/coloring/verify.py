"""
Coloring checkers.

Radius 1 scans every edge; radius 2 runs a depth-2 BFS from every node.
"""

from __future__ import annotations

from ..core.errors import ValidationError
from ..core.graph import Graph, NodeId
from .types import Coloring


def _check_total(graph: Graph, coloring: Coloring) -> None:
    missing = sorted(graph.nodes - set(coloring.colors))
    extra = sorted(set(coloring.colors) - graph.nodes)
    errors = []
    if missing:
        errors.append(f"nodes without a color: {missing}")
    if extra:
        errors.append(f"colored nodes not in the graph: {extra}")
    if errors:
        raise ValidationError(errors)


def coloring_conflicts(graph: Graph, coloring: Coloring) -> list[str]:
    """
    Every properness or range violation, as readable messages.

    Raises:
        ValidationError: the coloring is not total on the graph's nodes
    """
    _check_total(graph, coloring)
    colors = coloring.colors
    problems: list[str] = []
    for v in graph.sorted_nodes():
        if not 0 <= colors[v] < coloring.color_count:
            problems.append(f"node {v}: color {colors[v]} outside [0, {coloring.color_count})")

    if coloring.hop_radius == 1:
        for u, v in graph.edges():
            if colors[u] == colors[v]:
                problems.append(f"adjacent nodes {u} and {v} share color {colors[u]}")
        return problems

    for v in graph.sorted_nodes():
        for u, dist in sorted(graph.bfs_distances(v, limit=2).items()):
            if u > v and colors[u] == colors[v]:
                problems.append(f"nodes {v} and {u} at distance {dist} share color {colors[v]}")
    return problems


def verify_coloring(graph: Graph, coloring: Coloring) -> bool:
    """True iff the coloring is proper at its hop radius and within its palette."""
    return not coloring_conflicts(graph, coloring)


def conflicting_pairs(graph: Graph, coloring: Coloring) -> list[tuple[NodeId, NodeId]]:
    """Pairs within hop_radius that share a color."""
    _check_total(graph, coloring)
    colors = coloring.colors
    pairs = []
    for v in graph.sorted_nodes():
        for u in sorted(graph.bfs_distances(v, limit=coloring.hop_radius)):
            if u > v and colors[u] == colors[v]:
                pairs.append((v, u))
    return pairs
