"""
Exact min-max-load K-placement.

optimal_max_load decides each load cap T with an integral max-flow
(source -> chooser cap k, chooser -> neighbor cap 1, neighbor -> sink cap T)
and binary-searches the smallest feasible T. exhaustive_optimal is the
independent reference used to check the flow solver.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass
from itertools import combinations

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from ..core.errors import OracleError, ParameterError, SearchSpaceError
from ..core.graph import Graph, NodeId
from ..core.models import Placement

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_NODE_CAP = 60
DEFAULT_EXHAUSTIVE_CAP = 10**6

_SOURCE = ("source",)
_SINK = ("sink",)


@dataclass(frozen=True)
class OptimalPlacementResult:
    """Optimal maximum load and a placement achieving it."""
    optimal_max_load: int
    witness: Placement

    def to_json(self) -> str:
        return json.dumps(
            {
                "optimalMaxLoad": self.optimal_max_load,
                "witness": json.loads(self.witness.model_dump_json()),
            },
            indent=2,
        )


def _check_instance(graph: Graph, k: int) -> None:
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if not graph.nodes:
        raise ParameterError("empty graph")
    if graph.min_degree < k:
        raise ParameterError(f"oracle needs min degree >= k, got δ={graph.min_degree}, k={k}")


def _load_of(placement: Placement) -> int:
    loads: dict[NodeId, int] = {}
    for _, u in placement.selected_pairs():
        loads[u] = loads.get(u, 0) + 1
    return max(loads.values(), default=0)


class _FlowFeasibility:
    """Max-flow feasibility of a load cap, reusing one network."""

    def __init__(self, graph: Graph, k: int):
        self.graph = graph
        self.k = k
        self.network = nx.DiGraph()
        for v in graph.sorted_nodes():
            self.network.add_edge(_SOURCE, ("chooser", v), capacity=k)
            self.network.add_edge(("target", v), _SINK, capacity=0)
            for u in graph.neighbors(v):
                self.network.add_edge(("chooser", v), ("target", u), capacity=1)

    def solve(self, cap: int) -> Placement | None:
        for v in self.graph.nodes:
            self.network[("target", v)][_SINK]["capacity"] = cap
        value, flow = nx.maximum_flow(self.network, _SOURCE, _SINK, flow_func=edmonds_karp)
        if value != self.k * self.graph.node_count:
            return None
        choices = {
            v: tuple(
                u for u in self.graph.neighbors(v) if flow[("chooser", v)][("target", u)] >= 1
            )
            for v in self.graph.sorted_nodes()
        }
        return Placement(k=self.k, choices=choices)


def optimal_max_load(
    graph: Graph,
    k: int,
    node_cap: int = DEFAULT_ORACLE_NODE_CAP,
) -> OptimalPlacementResult:
    """
    Smallest achievable maximum load over all K-placements.

    The search runs over T in [k, Δ]: the average load is exactly k, and no
    node can be chosen more than deg(u) <= Δ times.

    Raises:
        ParameterError: min degree below k
        SearchSpaceError: more than node_cap nodes
        OracleError: flow results not monotone in T, or Δ infeasible
    """
    _check_instance(graph, k)
    if graph.node_count > node_cap:
        raise SearchSpaceError(f"{graph.node_count} nodes exceeds the oracle cap of {node_cap}")

    solver = _FlowFeasibility(graph, k)
    outcomes: dict[int, Placement | None] = {}
    lo, hi = k, graph.max_degree
    outcomes[hi] = solver.solve(hi)
    if outcomes[hi] is None:
        raise OracleError(f"load cap Δ={hi} infeasible although δ >= k")
    while lo < hi:
        mid = (lo + hi) // 2
        outcomes[mid] = solver.solve(mid)
        if outcomes[mid] is not None:
            hi = mid
        else:
            lo = mid + 1

    tried = sorted(outcomes)
    for small, large in zip(tried, tried[1:]):
        if outcomes[small] is not None and outcomes[large] is None:
            raise OracleError(f"flow feasibility not monotone: T={small} feasible, T={large} not")

    witness = outcomes[hi]
    assert witness is not None
    witness.validate_for(graph)
    if _load_of(witness) != hi:
        raise OracleError(f"witness load {_load_of(witness)} differs from optimum {hi}")
    logger.debug(f"flow oracle: optimal max load {hi} for k={k} on {graph!r}")
    return OptimalPlacementResult(optimal_max_load=hi, witness=witness)


def exhaustive_optimal(
    graph: Graph,
    k: int,
    max_space: int = DEFAULT_EXHAUSTIVE_CAP,
) -> OptimalPlacementResult:
    """
    Optimum by enumerating every K-placement (depth-first, pruned by the best
    load found so far).

    Raises:
        SearchSpaceError: Π_v C(deg(v), k) above max_space
    """
    _check_instance(graph, k)
    nodes = graph.sorted_nodes()
    space = math.prod(math.comb(graph.degree(v), k) for v in nodes)
    if space > max_space:
        raise SearchSpaceError(f"{space} placements exceeds the enumeration cap of {max_space}")

    options = [list(combinations(graph.neighbors(v), k)) for v in nodes]
    loads = {v: 0 for v in nodes}
    current: list[tuple[NodeId, ...]] = []
    best_load = math.inf
    best: list[tuple[NodeId, ...]] = []

    def descend(i: int, running_max: int) -> None:
        nonlocal best_load, best
        if running_max >= best_load:
            return
        if i == len(nodes):
            best_load = running_max
            best = list(current)
            return
        for combo in options[i]:
            for u in combo:
                loads[u] += 1
            current.append(combo)
            descend(i + 1, max([running_max] + [loads[u] for u in combo]))
            current.pop()
            for u in combo:
                loads[u] -= 1

    descend(0, 0)
    witness = Placement(k=k, choices=dict(zip(nodes, best)))
    return OptimalPlacementResult(optimal_max_load=int(best_load), witness=witness)
