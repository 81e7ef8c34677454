"""
Exact structural analyses: neighborhood independence, square graph,
selection subgraph, structural report.
"""

from __future__ import annotations

import logging

from .errors import IndependenceTooLargeError, ParameterError
from .graph import Graph, NodeId
from .models import Placement, StructuralReport

logger = logging.getLogger(__name__)

DEFAULT_NEIGHBORHOOD_CAP = 256
DEFAULT_SEARCH_BUDGET = 2**25


# =============================================================================
# Neighborhood independence
# =============================================================================


class _IndependenceSearch:
    """
    Branch-and-bound maximum independent set over one neighborhood.

    Vertices are bits of a Python int. The bound is a greedy clique cover of
    the candidate set: an independent set takes at most one vertex per clique.
    """

    def __init__(self, adj_masks: list[int], budget: int):
        self.adj = adj_masks
        full = (1 << len(adj_masks)) - 1
        self.non_adj = [full & ~mask & ~(1 << i) for i, mask in enumerate(adj_masks)]
        self.budget = budget
        self.explored = 0
        self.best = 0

    def _clique_cover(self, cand: int) -> int:
        cliques = 0
        rest = cand
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            extend = rest & self.adj[i]
            members = low
            while extend:
                bit = extend & -extend
                members |= bit
                extend &= self.adj[bit.bit_length() - 1]
            rest &= ~members
            cliques += 1
        return cliques

    def _search(self, cand: int, size: int) -> None:
        self.explored += 1
        if self.explored > self.budget:
            raise OverflowError
        if not cand:
            self.best = max(self.best, size)
            return
        if size + bin(cand).count("1") <= self.best:
            return
        if size + self._clique_cover(cand) <= self.best:
            return
        low = cand & -cand
        i = low.bit_length() - 1
        self._search(cand & self.non_adj[i], size + 1)
        self._search(cand & ~low, size)

    def run(self, lower_bound: int) -> int:
        self.best = lower_bound
        self._search((1 << len(self.adj)) - 1, 0)
        return self.best


def local_independence(
    graph: Graph,
    v: NodeId,
    lower_bound: int = 0,
    neighborhood_cap: int = DEFAULT_NEIGHBORHOOD_CAP,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
) -> int:
    """
    Maximum independent set size inside Γ(v).

    Returns max(lower_bound, α(G[Γ(v)])), so callers tracking a running
    maximum only pay for proving it cannot be beaten.
    """
    nbrs = graph.neighbors(v)
    if len(nbrs) <= lower_bound:
        return lower_bound
    if len(nbrs) > neighborhood_cap:
        raise IndependenceTooLargeError(v, len(nbrs), f"cap is {neighborhood_cap} nodes")
    index = {u: i for i, u in enumerate(nbrs)}
    masks = []
    for u in nbrs:
        mask = 0
        for w in graph.neighbors(u):
            j = index.get(w)
            if j is not None:
                mask |= 1 << j
        masks.append(mask)
    search = _IndependenceSearch(masks, search_budget)
    try:
        return search.run(lower_bound)
    except OverflowError:
        raise IndependenceTooLargeError(
            v, len(nbrs), f"search budget of {search_budget} branch nodes exhausted"
        ) from None


def neighborhood_independence(
    graph: Graph,
    neighborhood_cap: int = DEFAULT_NEIGHBORHOOD_CAP,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
) -> int:
    """
    Exact I(G): the largest independent set inside any single neighborhood.

    Raises:
        ParameterError: empty graph
        IndependenceTooLargeError: a neighborhood exceeds the configured caps
    """
    if not graph.nodes:
        raise ParameterError("neighborhood independence of an empty graph")
    best = 0
    # Large neighborhoods first: the running maximum prunes the rest.
    for v in sorted(graph.nodes, key=lambda x: (-graph.degree(x), x)):
        best = local_independence(graph, v, best, neighborhood_cap, search_budget)
    return best


# =============================================================================
# Derived graphs
# =============================================================================


def square_graph(graph: Graph) -> Graph:
    """G²: same nodes, edge {u, v} iff dist(u, v) is 1 or 2."""
    adjacency: dict[NodeId, tuple[NodeId, ...]] = {}
    for v in graph.sorted_nodes():
        reach = set(graph.neighbors(v))
        for u in graph.neighbors(v):
            reach.update(graph.neighbors(u))
        reach.discard(v)
        adjacency[v] = tuple(sorted(reach))
    return Graph(nodes=graph.nodes, adjacency=adjacency)


def selection_subgraph(graph: Graph, placement: Placement) -> Graph:
    """
    G' = (V, E'): edge {v, u} iff v chose u or u chose v.

    Raises:
        ValidationError: placement invalid for graph
    """
    placement.validate_for(graph)
    adjacency: dict[NodeId, set[NodeId]] = {v: set() for v in graph.nodes}
    for v, u in placement.selected_pairs():
        adjacency[v].add(u)
        adjacency[u].add(v)
    return Graph(
        nodes=graph.nodes,
        adjacency={v: tuple(sorted(nbrs)) for v, nbrs in sorted(adjacency.items())},
    )


def structural_report(
    graph: Graph,
    neighborhood_cap: int = DEFAULT_NEIGHBORHOOD_CAP,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
) -> StructuralReport:
    """Δ, δ, exact c, n and m of graph."""
    c = neighborhood_independence(graph, neighborhood_cap, search_budget)
    logger.debug(f"structural report for {graph!r}: c={c}")
    return StructuralReport(
        max_degree=graph.max_degree,
        min_degree=graph.min_degree,
        neighborhood_independence=c,
        node_count=graph.node_count,
        edge_count=graph.edge_count,
    )
