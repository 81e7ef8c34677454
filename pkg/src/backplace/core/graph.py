"""
Immutable undirected graph - the network under simulation.

Node IDs are positive integers. Algorithms only ever use the order of IDs,
never their density, so loaded graphs may use arbitrary IDs while the
generators number nodes 1..n.

Usage:
    from backplace.core.graph import Graph

    g = Graph.from_edges([(1, 2), (2, 3)])
    g.neighbors(2)   # (1, 3)
    g.max_degree     # 2
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping, Optional

from .errors import DuplicateEdgeError, ParameterError, SelfLoopError, UnknownNodeError

if TYPE_CHECKING:
    import networkx as nx

NodeId = int
Edge = tuple[NodeId, NodeId]


@dataclass(frozen=True)
class Graph:
    """
    Undirected simple graph with sorted adjacency tuples.

    Invariants (checked on construction):
    - symmetric adjacency
    - no self-loops
    - every adjacency entry is a node
    """
    nodes: frozenset[NodeId]
    adjacency: Mapping[NodeId, tuple[NodeId, ...]] = field(repr=False)

    def __post_init__(self) -> None:
        for v in self.nodes:
            if not isinstance(v, int) or v < 1:
                raise ParameterError(f"node IDs must be positive integers, got {v!r}")
        if set(self.adjacency) != set(self.nodes):
            raise ParameterError("adjacency keys must equal the node set")
        for v, nbrs in self.adjacency.items():
            for u in nbrs:
                if u == v:
                    raise SelfLoopError(v)
                if u not in self.nodes:
                    raise UnknownNodeError(u)
                if v not in self._neighbor_set(u):
                    raise ParameterError(f"adjacency is not symmetric for edge {v}-{u}")

    def _neighbor_set(self, v: NodeId) -> frozenset[NodeId]:
        cache = self.__dict__.setdefault("_sets", {})
        if v not in cache:
            cache[v] = frozenset(self.adjacency[v])
        return cache[v]

    # -------------------------------------------------------------------------
    # Construction
    # -------------------------------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Edge],
        nodes: Optional[Iterable[NodeId]] = None,
    ) -> "Graph":
        """
        Build a graph from an edge iterable.

        Args:
            edges: Undirected (u, v) pairs
            nodes: Declared node set. When given, edges may only use these IDs;
                otherwise the node set is the set of edge endpoints.

        Raises:
            SelfLoopError, DuplicateEdgeError, UnknownNodeError
        """
        declared = set(nodes) if nodes is not None else None
        adjacency: dict[NodeId, set[NodeId]] = {v: set() for v in declared or ()}
        for u, v in edges:
            if u == v:
                raise SelfLoopError(u)
            for w in (u, v):
                if declared is not None and w not in declared:
                    raise UnknownNodeError(w)
                adjacency.setdefault(w, set())
            if v in adjacency[u]:
                raise DuplicateEdgeError(u, v)
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(
            nodes=frozenset(adjacency),
            adjacency={v: tuple(sorted(nbrs)) for v, nbrs in sorted(adjacency.items())},
        )

    def induced(self, nodes: Iterable[NodeId]) -> "Graph":
        """Subgraph induced on the given nodes."""
        keep = set(nodes)
        for v in keep:
            if v not in self.nodes:
                raise UnknownNodeError(v)
        return Graph(
            nodes=frozenset(keep),
            adjacency={
                v: tuple(u for u in self.adjacency[v] if u in keep) for v in sorted(keep)
            },
        )

    # -------------------------------------------------------------------------
    # Local queries
    # -------------------------------------------------------------------------

    def neighbors(self, v: NodeId) -> tuple[NodeId, ...]:
        """Γ(v) in ascending ID order."""
        try:
            return self.adjacency[v]
        except KeyError:
            raise UnknownNodeError(v) from None

    def degree(self, v: NodeId) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: NodeId, v: NodeId) -> bool:
        return u in self.adjacency and v in self._neighbor_set(u)

    def sorted_nodes(self) -> list[NodeId]:
        return sorted(self.nodes)

    # -------------------------------------------------------------------------
    # Global quantities
    # -------------------------------------------------------------------------

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency.values()) // 2

    @property
    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adjacency.values()), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(nbrs) for nbrs in self.adjacency.values()), default=0)

    @property
    def max_id(self) -> int:
        return max(self.nodes, default=0)

    def edges(self) -> Iterator[Edge]:
        """Edges as (u, v) with u < v, sorted."""
        for v in self.sorted_nodes():
            for u in self.adjacency[v]:
                if v < u:
                    yield (v, u)

    def isolated_nodes(self) -> list[NodeId]:
        return [v for v in self.sorted_nodes() if not self.adjacency[v]]

    def bfs_distances(self, source: NodeId, limit: Optional[int] = None) -> dict[NodeId, int]:
        """Hop distances from source, optionally truncated at depth limit."""
        dist = {source: 0}
        queue = deque([source])
        while queue:
            v = queue.popleft()
            if limit is not None and dist[v] >= limit:
                continue
            for u in self.neighbors(v):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return dist

    def distance(self, u: NodeId, v: NodeId) -> Optional[int]:
        """dist(u, v), or None when v is unreachable."""
        return self.bfs_distances(u).get(v)

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        return len(self.bfs_distances(min(self.nodes))) == len(self.nodes)

    def to_networkx(self) -> "nx.Graph":
        import networkx as nx

        nxg = nx.Graph()
        nxg.add_nodes_from(self.sorted_nodes())
        nxg.add_edges_from(self.edges())
        return nxg

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.nodes == other.nodes and list(self.edges()) == list(other.edges())

    def __hash__(self) -> int:
        return hash((self.nodes, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"Graph(n={self.node_count}, m={self.edge_count})"
