"""
Linial color reduction with polynomial cover-free families.

A color c < q^(d+1) names the polynomial p_c of degree <= d over GF(q) whose
coefficients are the base-q digits of c. Two distinct polynomials agree on at
most d points, so with q > degree_bound * d a node always finds x where its
polynomial differs from every neighbor's. Its new color is x * q + p_c(x),
which lies in [0, q²).

Every node derives the same schedule of (q, d) steps from the ID space and
the degree bound, which all nodes know, so the reduction runs in lockstep:
one round per step.

Constants:
    linial_color_bound(Δ) = (4Δ + 2)²    (final palette never exceeds this)
    LINIAL_ROUND_SLACK = 3               (rounds <= log*(ID space) + 3)
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from ..core.errors import ParameterError, SimulationError
from ..core.graph import Graph, NodeId
from ..runtime.engine import DEFAULT_BANDWIDTH_FACTOR, DEFAULT_MAX_ROUNDS, SynchronousEngine
from ..runtime.program import NodeContext, NodeProgram, Step, decode_ints, encode_ints, width_for
from .types import Coloring

logger = logging.getLogger(__name__)

LINIAL_ROUND_SLACK = 3


# =============================================================================
# Arithmetic
# =============================================================================


def log_star(x: float) -> int:
    """Times log₂ must be applied to x to reach a value <= 2."""
    count = 0
    while x > 2:
        x = math.log2(x)
        count += 1
    return count


def is_prime(x: int) -> bool:
    if x < 2:
        return False
    if x % 2 == 0:
        return x == 2
    return all(x % f for f in range(3, math.isqrt(x) + 1, 2))


def next_prime(x: int) -> int:
    """Smallest prime >= x."""
    x = max(2, x)
    while not is_prime(x):
        x += 1
    return x


def iroot_ceil(m: int, r: int) -> int:
    """Smallest integer y >= 1 with y**r >= m."""
    if m <= 1:
        return 1
    y = max(1, int(round(m ** (1.0 / r))))
    while y**r < m:
        y += 1
    while y > 1 and (y - 1) ** r >= m:
        y -= 1
    return y


def linial_color_bound(max_degree: int) -> int:
    """q(Δ): the documented palette bound after reduction to a fixpoint."""
    return (4 * max_degree + 2) ** 2


# =============================================================================
# Schedule
# =============================================================================


@dataclass(frozen=True)
class LinialStep:
    """One reduction round: colors_before -> q² colors via degree-d polynomials over GF(q)."""
    q: int
    d: int
    colors_before: int

    @property
    def colors_after(self) -> int:
        return self.q * self.q


def linial_schedule(id_space: int, degree_bound: int) -> list[LinialStep]:
    """
    Reduction steps from id_space colors down to the fixpoint.

    Each step picks the polynomial degree d that gives the smallest q²,
    subject to q prime, q > degree_bound * d and q^(d+1) >= current colors.
    Stops when no d shrinks the palette.
    """
    if id_space < 1:
        raise ParameterError(f"id_space must be >= 1, got {id_space}")
    if degree_bound < 0:
        raise ParameterError(f"degree_bound must be >= 0, got {degree_bound}")
    steps: list[LinialStep] = []
    m = id_space
    while True:
        best: Optional[LinialStep] = None
        for d in range(1, max(2, m.bit_length()) + 1):
            q = next_prime(max(degree_bound * d + 1, iroot_ceil(m, d + 1)))
            if q * q < m and (best is None or q < best.q):
                best = LinialStep(q=q, d=d, colors_before=m)
        if best is None:
            return steps
        steps.append(best)
        m = best.colors_after


def _digits(color: int, q: int, count: int) -> list[int]:
    digits = []
    for _ in range(count):
        color, digit = divmod(color, q)
        digits.append(digit)
    return digits


def _evaluate(coeffs: Sequence[int], x: int, q: int) -> int:
    value = 0
    for a in reversed(coeffs):
        value = (value * x + a) % q
    return value


def reduce_color(own: int, neighbor_colors: Iterable[int], step: LinialStep) -> int:
    """One Linial step for one node."""
    q, d = step.q, step.d
    mine = _digits(own, q, d + 1)
    others = [_digits(c, q, d + 1) for c in set(neighbor_colors) if c != own]
    for x in range(q):
        value = _evaluate(mine, x, q)
        if all(_evaluate(other, x, q) != value for other in others):
            return x * q + value
    raise SimulationError(
        f"no separating point for color {own} among {len(others)} neighbor colors "
        f"(q={q}, d={d}); degree bound too small"
    )


# =============================================================================
# Node program
# =============================================================================


class LinialProgram(NodeProgram[int]):
    """
    Round 0 sends the initial color (ID - 1); round t applies step t - 1 to
    the colors received and sends the result, halting after the last step.
    """

    def __init__(self, schedule: Sequence[LinialStep], width: int):
        self.schedule = list(schedule)
        self.width = width

    def initial_state(self, node_id: NodeId, neighbor_ids: Sequence[NodeId]) -> int:
        return node_id - 1

    def step(self, ctx: NodeContext[int]) -> Step[int]:
        t = ctx.round_number
        color = ctx.state
        if t > 0:
            received = [decode_ints(m.payload, self.width)[0] for m in ctx.inbox]
            color = reduce_color(color, received, self.schedule[t - 1])
        if t == len(self.schedule):
            return Step(state=color, halt=True, output=color)
        payload = encode_ints([color], self.width)
        return Step(state=color, send={u: payload for u in ctx.neighbor_ids})


def resolve_id_space(graph: Graph, id_space: Optional[int]) -> int:
    space = id_space if id_space is not None else max(1, graph.max_id)
    if graph.max_id > space:
        raise ParameterError(f"node ID {graph.max_id} exceeds the ID space bound {space}")
    return space


def linial_coloring(
    graph: Graph,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    id_space: Optional[int] = None,
    degree_bound: Optional[int] = None,
    bandwidth_factor: int = DEFAULT_BANDWIDTH_FACTOR,
) -> Coloring:
    """
    Proper 1-hop coloring with at most linial_color_bound(degree_bound) colors
    (or id_space colors, if that is already smaller).

    Args:
        graph: The network
        max_rounds: Engine round limit
        id_space: Upper bound on node IDs (default: the largest ID)
        degree_bound: Globally known bound on Δ (default: Δ(graph))
        bandwidth_factor: CONGEST bandwidth factor

    Raises:
        RoundLimitError: max_rounds exceeded
        BandwidthError: a color does not fit in one message
    """
    space = resolve_id_space(graph, id_space)
    bound = graph.max_degree if degree_bound is None else degree_bound
    if bound < graph.max_degree:
        raise ParameterError(f"degree bound {bound} is below Δ={graph.max_degree}")
    schedule = linial_schedule(space, bound)
    program = LinialProgram(schedule, width_for(space - 1))
    run = SynchronousEngine(graph, bandwidth_factor).run(program, max_rounds=max_rounds)
    count = schedule[-1].colors_after if schedule else space
    logger.info(f"Linial: {space} -> {count} colors in {len(schedule)} round(s) (Δ bound {bound})")
    return Coloring(
        colors=dict(run.outputs),
        color_count=count,
        hop_radius=1,
        rounds_used=len(schedule),
    )
