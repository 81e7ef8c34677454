"""
Distance-2 coloring: Linial on G² simulated over G.

One G² round costs 1 + relay_rounds rounds of G:
    offset 0       every node sends its color to its neighbors
    offset 1..R    every node relays, to each neighbor u, the colors it heard
                   from its other neighbors, in chunks that fit one message
The first round of the next iteration applies the Linial step to the union
of direct and relayed colors, i.e. to the colors of the node's G²
neighborhood. relay_rounds grows when a neighbor list does not fit one
message, and the inflated round count is what gets reported.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from ..core.graph import Graph, NodeId
from ..runtime.engine import DEFAULT_BANDWIDTH_FACTOR, DEFAULT_MAX_ROUNDS, SynchronousEngine
from ..runtime.program import (
    NodeContext,
    NodeProgram,
    Step,
    bandwidth_bytes,
    decode_ints,
    encode_ints,
    width_for,
)
from .linial import LinialStep, linial_schedule, reduce_color, resolve_id_space
from .types import Coloring

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RelayState:
    color: int
    direct: dict[NodeId, int] = field(default_factory=dict)
    relayed: frozenset[int] = frozenset()


class Distance2Program(NodeProgram[RelayState]):
    """Linial steps over G² with 2-hop color relays."""

    def __init__(self, schedule: Sequence[LinialStep], width: int, chunk: int, relay_rounds: int):
        self.schedule = list(schedule)
        self.width = width
        self.chunk = chunk
        self.relay_rounds = relay_rounds
        self.period = 1 + relay_rounds

    def initial_state(self, node_id: NodeId, neighbor_ids: Sequence[NodeId]) -> RelayState:
        return RelayState(color=node_id - 1)

    def step(self, ctx: NodeContext[RelayState]) -> Step[RelayState]:
        t = ctx.round_number
        iteration, offset = divmod(t, self.period)
        state = ctx.state

        if t > 0:
            if (offset - 1) % self.period == 0:
                direct = {m.src: decode_ints(m.payload, self.width)[0] for m in ctx.inbox}
                state = RelayState(color=state.color, direct=direct, relayed=state.relayed)
            else:
                extra = set(state.relayed)
                for m in ctx.inbox:
                    extra.update(decode_ints(m.payload, self.width))
                state = RelayState(color=state.color, direct=state.direct, relayed=frozenset(extra))

        if offset == 0:
            color = state.color
            if iteration > 0:
                seen = set(state.direct.values()) | state.relayed
                color = reduce_color(color, seen, self.schedule[iteration - 1])
            if iteration == len(self.schedule):
                return Step(state=RelayState(color=color), halt=True, output=color)
            payload = encode_ints([color], self.width)
            return Step(state=RelayState(color=color), send={u: payload for u in ctx.neighbor_ids})

        lo = (offset - 1) * self.chunk
        send = {}
        for u in ctx.neighbor_ids:
            others = [state.direct[w] for w in sorted(state.direct) if w != u]
            part = others[lo:lo + self.chunk]
            if part:
                send[u] = encode_ints(part, self.width)
        return Step(state=state, send=send)


def distance2_coloring(
    graph: Graph,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    id_space: Optional[int] = None,
    bandwidth_factor: int = DEFAULT_BANDWIDTH_FACTOR,
) -> Coloring:
    """
    Proper 2-hop coloring with at most linial_color_bound(Δ² + Δ) colors.

    The result is color for color what linial_coloring(square_graph(graph),
    degree_bound=Δ²+Δ) produces.

    Raises:
        RoundLimitError: max_rounds exceeded
        BandwidthError: one color does not fit in a message
    """
    space = resolve_id_space(graph, id_space)
    delta = graph.max_degree
    degree_bound = delta * delta + delta
    schedule = linial_schedule(space, degree_bound)
    width = width_for(space - 1)
    capacity = bandwidth_bytes(graph.node_count, bandwidth_factor)
    chunk = max(1, capacity // width)
    relay_rounds = math.ceil(max(delta - 1, 0) / chunk)
    program = Distance2Program(schedule, width, chunk, relay_rounds)
    run = SynchronousEngine(graph, bandwidth_factor).run(program, max_rounds=max_rounds)
    rounds = len(schedule) * (1 + relay_rounds)
    count = schedule[-1].colors_after if schedule else space
    logger.info(
        f"distance-2 coloring: {count} colors, {len(schedule)} G² round(s) of "
        f"{1 + relay_rounds} round(s) each"
    )
    return Coloring(colors=dict(run.outputs), color_count=count, hop_radius=2, rounds_used=rounds)
