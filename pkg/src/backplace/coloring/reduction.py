"""
Color elimination down to Δ + 1 colors.

Round 0: every node sends its start color.
Round t (1..L): nodes holding color start_count - t pick the smallest color
free in their neighborhood and announce it. Nodes of one color are never
adjacent, so they recolor simultaneously. L = start_count - (Δ + 1).

Usage:
    start = linial_coloring(graph)
    coloring = reduce_to_delta_plus_one(graph, start)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from ..core.errors import ValidationError
from ..core.graph import Graph, NodeId
from ..runtime.engine import DEFAULT_BANDWIDTH_FACTOR, DEFAULT_MAX_ROUNDS, SynchronousEngine
from ..runtime.program import NodeContext, NodeProgram, Step, decode_ints, encode_ints, width_for
from .linial import linial_coloring
from .types import Coloring
from .verify import coloring_conflicts

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EliminationState:
    color: int
    neighbor_colors: dict[NodeId, int] = field(default_factory=dict)


class EliminationProgram(NodeProgram[EliminationState]):
    """One color class eliminated per round, highest first."""

    def __init__(self, start: Coloring, target_count: int, width: int):
        self.start = start
        self.target_count = target_count
        self.last_round = start.color_count - target_count
        self.width = width

    def initial_state(self, node_id: NodeId, neighbor_ids: Sequence[NodeId]) -> EliminationState:
        return EliminationState(color=self.start.colors[node_id])

    def step(self, ctx: NodeContext[EliminationState]) -> Step[EliminationState]:
        t = ctx.round_number
        known = dict(ctx.state.neighbor_colors)
        for m in ctx.inbox:
            known[m.src] = decode_ints(m.payload, self.width)[0]
        color = ctx.state.color

        announce = t == 0
        if t > 0 and color == self.start.color_count - t:
            taken = set(known.values())
            color = next(c for c in range(self.target_count) if c not in taken)
            announce = True

        state = EliminationState(color=color, neighbor_colors=known)
        if t == self.last_round:
            return Step(state=state, halt=True, output=color)
        send = {}
        if announce:
            payload = encode_ints([color], self.width)
            send = {u: payload for u in ctx.neighbor_ids}
        return Step(state=state, send=send)


def reduce_to_delta_plus_one(
    graph: Graph,
    start: Coloring,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    bandwidth_factor: int = DEFAULT_BANDWIDTH_FACTOR,
) -> Coloring:
    """
    Proper 1-hop coloring with at most Δ + 1 colors.

    rounds_used = start.rounds_used + max(0, start.color_count - (Δ + 1)).

    Raises:
        ValidationError: start is not a proper coloring of graph
        RoundLimitError: max_rounds exceeded
    """
    problems = coloring_conflicts(graph, start)
    if problems:
        raise ValidationError(problems)
    target = graph.max_degree + 1
    steps = start.color_count - target
    if steps <= 0:
        logger.debug(f"start coloring already has {start.color_count} <= Δ+1 colors")
        return Coloring(
            colors=dict(start.colors),
            color_count=start.color_count,
            hop_radius=1,
            rounds_used=start.rounds_used,
        )

    program = EliminationProgram(start, target, width_for(start.color_count - 1))
    run = SynchronousEngine(graph, bandwidth_factor).run(program, max_rounds=max_rounds)
    logger.info(f"eliminated {steps} color(s): {start.color_count} -> {target}")
    return Coloring(
        colors=dict(run.outputs),
        color_count=target,
        hop_radius=1,
        rounds_used=start.rounds_used + steps,
    )


def delta_plus_one_coloring(
    graph: Graph,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    id_space: Optional[int] = None,
    bandwidth_factor: int = DEFAULT_BANDWIDTH_FACTOR,
) -> Coloring:
    """Linial coloring followed by color elimination."""
    start = linial_coloring(
        graph, max_rounds=max_rounds, id_space=id_space, bandwidth_factor=bandwidth_factor
    )
    return reduce_to_delta_plus_one(graph, start, max_rounds=max_rounds, bandwidth_factor=bandwidth_factor)
