"""
Synchronous CONGEST round engine.

Round t:
1. every live, non-halted node is invoked once with the messages sent to it
   in round t - 1, sorted by sender ID;
2. outgoing payloads are checked against the neighbor set and the bandwidth
   limit, then queued for round t + 1.

Nodes crashed at round t are not invoked from round t on and their queued
messages are dropped. Messages addressed to halted nodes are dropped.

Usage:
    engine = SynchronousEngine(graph, bandwidth_factor=32)
    result = engine.run(program, faults=fault_plan([(3, 0)]))
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Mapping, Optional, Union

from pydantic import BaseModel, ConfigDict

from ..core.errors import BandwidthError, ParameterError, ProtocolError, RoundLimitError
from ..core.graph import Graph, NodeId
from .faults import FaultPlan
from .program import Message, NodeContext, NodeProgram, Step, bandwidth_bytes

logger = logging.getLogger(__name__)

DEFAULT_BANDWIDTH_FACTOR = 32
DEFAULT_MAX_ROUNDS = 100_000


class TraceRecord(BaseModel):
    """One sent message, as written to the JSON-lines trace."""
    model_config = ConfigDict(frozen=True)

    round: int
    src: int
    dst: int
    bytes: int


@dataclass(frozen=True)
class RunResult:
    """
    Outcome of one synchronous run.

    rounds_used counts rounds the way round complexity is counted: a final
    round in which nodes only read their inbox and halt, with nobody sending,
    belongs to the round before it. max_rounds bounds this count, so that
    terminal round may run one past the limit.
    """
    rounds_used: int
    communication_rounds: int
    outputs: Mapping[NodeId, Any]
    crashed_nodes: frozenset[NodeId] = frozenset()
    trace: Optional[tuple[TraceRecord, ...]] = field(default=None, compare=True)


class SynchronousEngine:
    """
    Drives a NodeProgram over a graph in lockstep rounds.

    Args:
        graph: The network
        bandwidth_factor: Limit is bandwidth_factor * ⌈log₂(n+1)⌉ bits per message
        record_trace: Keep every sent message in RunResult.trace
        workers: Invoke step functions of one round on a thread pool when > 1
    """

    def __init__(
        self,
        graph: Graph,
        bandwidth_factor: int = DEFAULT_BANDWIDTH_FACTOR,
        record_trace: bool = False,
        workers: int = 1,
    ):
        if bandwidth_factor < 1:
            raise ParameterError(f"bandwidth_factor must be >= 1, got {bandwidth_factor}")
        if workers < 1:
            raise ParameterError(f"workers must be >= 1, got {workers}")
        self.graph = graph
        self.bandwidth_factor = bandwidth_factor
        self.limit = bandwidth_bytes(graph.node_count, bandwidth_factor)
        self.record_trace = record_trace
        self.workers = workers

    def run(
        self,
        program: NodeProgram,
        faults: Optional[FaultPlan] = None,
        max_rounds: int = DEFAULT_MAX_ROUNDS,
    ) -> RunResult:
        """
        Execute program until every live node has halted.

        Raises:
            BandwidthError: a payload above the per-message limit
            ProtocolError: a message to a non-neighbor (or crashed neighbor)
            RoundLimitError: max_rounds exhausted
        """
        if max_rounds < 1:
            raise ParameterError(f"max_rounds must be >= 1, got {max_rounds}")
        faults = faults or FaultPlan()
        faults.check_nodes(self.graph.nodes)

        graph = self.graph
        nodes = graph.sorted_nodes()
        states = {v: program.initial_state(v, graph.neighbors(v)) for v in nodes}
        halted: set[NodeId] = set()
        outputs: dict[NodeId, Any] = {}
        pending: dict[NodeId, list[Message]] = {}
        trace: list[TraceRecord] = []
        communication_rounds = 0
        sent_last = False
        round_number = 0

        pool = ThreadPoolExecutor(max_workers=self.workers) if self.workers > 1 else None
        try:
            while True:
                crashed = faults.crashed_by(round_number)
                active = [v for v in nodes if v not in crashed and v not in halted]
                if not active:
                    break
                if round_number > max_rounds:
                    raise RoundLimitError(max_rounds)

                contexts = []
                for v in active:
                    inbox = tuple(
                        sorted(
                            (m for m in pending.get(v, ()) if m.src not in crashed),
                            key=lambda m: m.src,
                        )
                    )
                    contexts.append(
                        NodeContext(
                            self_id=v,
                            neighbor_ids=tuple(u for u in graph.neighbors(v) if u not in crashed),
                            round_number=round_number,
                            inbox=inbox,
                            state=states[v],
                            bandwidth_bytes=self.limit,
                        )
                    )

                if pool is not None:
                    steps: Iterable[Step] = list(pool.map(program.step, contexts))
                else:
                    steps = [program.step(ctx) for ctx in contexts]

                next_pending: dict[NodeId, list[Message]] = {}
                sent_last = False
                for ctx, step in zip(contexts, steps):
                    v = ctx.self_id
                    allowed = set(ctx.neighbor_ids)
                    for dst in sorted(step.send):
                        payload = step.send[dst]
                        if dst not in allowed:
                            raise ProtocolError(
                                f"node {v} addressed {dst}, which is not a live neighbor",
                                round_number,
                            )
                        if not isinstance(payload, (bytes, bytearray)):
                            raise ProtocolError(
                                f"node {v} sent a {type(payload).__name__} payload, expected bytes",
                                round_number,
                            )
                        if len(payload) > self.limit:
                            raise BandwidthError(v, dst, round_number, len(payload), self.limit)
                        next_pending.setdefault(dst, []).append(Message(v, dst, bytes(payload)))
                        if self.record_trace:
                            trace.append(
                                TraceRecord(round=round_number, src=v, dst=dst, bytes=len(payload))
                            )
                        sent_last = True
                    states[v] = step.state
                    if step.halt:
                        halted.add(v)
                        outputs[v] = step.output

                if sent_last:
                    if round_number == max_rounds:
                        raise RoundLimitError(max_rounds)
                    communication_rounds += 1
                logger.debug(
                    f"round {round_number}: {len(active)} active, "
                    f"{sum(len(m) for m in next_pending.values())} messages"
                )
                pending = next_pending
                round_number += 1
        finally:
            if pool is not None:
                pool.shutdown()

        executed = round_number
        rounds_used = executed
        if executed >= 2 and not sent_last:
            rounds_used -= 1

        return RunResult(
            rounds_used=rounds_used,
            communication_rounds=communication_rounds,
            outputs=dict(sorted(outputs.items())),
            crashed_nodes=faults.crashed_by(max(executed - 1, 0)),
            trace=tuple(trace) if self.record_trace else None,
        )


def run_synchronous(
    graph: Graph,
    program: NodeProgram,
    faults: Optional[FaultPlan] = None,
    bandwidth_factor: int = DEFAULT_BANDWIDTH_FACTOR,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    record_trace: bool = False,
) -> RunResult:
    """Run program on graph under the CONGEST contract."""
    engine = SynchronousEngine(graph, bandwidth_factor, record_trace=record_trace)
    return engine.run(program, faults=faults, max_rounds=max_rounds)


def dump_trace_jsonl(trace: Iterable[TraceRecord]) -> str:
    """One JSON object per message: {round, src, dst, bytes}."""
    lines = [json.dumps(record.model_dump()) for record in trace]
    return "\n".join(lines) + ("\n" if lines else "")


def write_trace_jsonl(trace: Iterable[TraceRecord], path: Union[Path, str]) -> None:
    Path(path).write_text(dump_trace_jsonl(trace), encoding="utf-8")
