"""
K-Next-Modulo backup selection.

Every node picks the k neighbors that immediately follow its own ID in the
circular ascending order of its neighborhood. The choice needs only the
neighbor IDs a node knows from the start; the single communication round
tells each chosen node who picked it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from ..core.errors import IsolatedNodeError, ParameterError
from ..core.graph import Graph, NodeId
from ..core.models import Placement
from ..runtime.engine import DEFAULT_BANDWIDTH_FACTOR, DEFAULT_MAX_ROUNDS, RunResult, SynchronousEngine
from ..runtime.program import NodeContext, NodeProgram, Step

logger = logging.getLogger(__name__)

CHOSEN_TAG = b"\x01"


def k_next_modulo(v: NodeId, neighbors: Sequence[NodeId], k: int) -> tuple[NodeId, ...]:
    """
    The first min(k, |neighbors|) neighbors after v in circular ID order.

    Args:
        v: The choosing node
        neighbors: Γ(v), ascending, without v
        k: Number of backups wanted

    Raises:
        ParameterError: k < 1, unsorted neighbors, or v among its neighbors
        IsolatedNodeError: empty neighbor list
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if not neighbors:
        raise IsolatedNodeError([v])
    if any(a >= b for a, b in zip(neighbors, neighbors[1:])):
        raise ParameterError(f"neighbors of {v} must be strictly ascending: {list(neighbors)}")
    if v in neighbors:
        raise ParameterError(f"node {v} listed among its own neighbors")
    successors = [u for u in neighbors if u > v]
    predecessors = [u for u in neighbors if u < v]
    return tuple((successors + predecessors)[:k])


def place_backups(graph: Graph, k: int) -> Placement:
    """K-Next-Modulo evaluated centrally at every node."""
    isolated = graph.isolated_nodes()
    if isolated:
        raise IsolatedNodeError(isolated)
    return Placement(
        k=k,
        choices={v: k_next_modulo(v, graph.neighbors(v), k) for v in graph.sorted_nodes()},
    )


@dataclass(frozen=True)
class KBPState:
    choices: tuple[NodeId, ...] = ()
    chosen_by: tuple[NodeId, ...] = ()


class KBPProgram(NodeProgram[KBPState]):
    """
    Distributed K-Next-Modulo.

    Round 0: compute choices and notify each chosen neighbor.
    Round 1: read notifications and halt with (choices, chosen_by).
    """

    def __init__(self, k: int):
        if k < 1:
            raise ParameterError(f"k must be >= 1, got {k}")
        self.k = k

    def initial_state(self, node_id: NodeId, neighbor_ids: Sequence[NodeId]) -> KBPState:
        return KBPState()

    def step(self, ctx: NodeContext[KBPState]) -> Step[KBPState]:
        if ctx.round_number == 0:
            choices = k_next_modulo(ctx.self_id, ctx.neighbor_ids, self.k)
            return Step(
                state=KBPState(choices=choices),
                send={u: CHOSEN_TAG for u in choices},
            )
        chosen_by = tuple(m.src for m in ctx.inbox if m.payload == CHOSEN_TAG)
        state = KBPState(choices=ctx.state.choices, chosen_by=chosen_by)
        return Step(state=state, halt=True, output=state)


def run_kbp(
    graph: Graph,
    k: int,
    bandwidth_factor: int = DEFAULT_BANDWIDTH_FACTOR,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    record_trace: bool = False,
) -> tuple[Placement, RunResult]:
    """
    Run K-Next-Modulo on the synchronous engine.

    Returns:
        (placement, run result); run.rounds_used is 1

    Raises:
        IsolatedNodeError: graph has nodes without neighbors
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    isolated = graph.isolated_nodes()
    if isolated:
        raise IsolatedNodeError(isolated)
    engine = SynchronousEngine(graph, bandwidth_factor, record_trace=record_trace)
    run = engine.run(KBPProgram(k), max_rounds=max_rounds)
    placement = Placement(k=k, choices={v: out.choices for v, out in run.outputs.items()})
    logger.info(f"K-Next-Modulo (k={k}) placed {graph.node_count} nodes in {run.rounds_used} round(s)")
    return placement, run


def chosen_by(run: RunResult) -> dict[NodeId, tuple[NodeId, ...]]:
    """Who chose each node, as learned by the nodes themselves."""
    return {v: out.chosen_by for v, out in run.outputs.items()}
