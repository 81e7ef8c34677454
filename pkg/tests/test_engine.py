"""Synchronous engine, wire codec and crash plans."""

from __future__ import annotations

import json
from typing import Sequence

import pytest

from backplace.core.errors import (
    BandwidthError,
    GraphFormatError,
    ParameterError,
    ProtocolError,
    RoundLimitError,
    UnknownNodeError,
)
from backplace.core.generators import generate_udg
from backplace.core.graph import Graph
from backplace.runtime import (
    FaultPlan,
    NodeContext,
    NodeProgram,
    Step,
    SynchronousEngine,
    bandwidth_bytes,
    decode_ints,
    dump_trace_jsonl,
    encode_ints,
    fault_plan,
    id_bits,
    load_fault_plan,
    run_synchronous,
    width_for,
)


class EchoProgram(NodeProgram[None]):
    """Halts at once with its own ID."""

    def initial_state(self, node_id: int, neighbor_ids: Sequence[int]) -> None:
        return None

    def step(self, ctx: NodeContext[None]) -> Step[None]:
        return Step(state=None, halt=True, output=ctx.self_id)


class BroadcastProgram(NodeProgram[None]):
    """Round 0 sends a fixed payload to every neighbor; round 1 halts with the senders."""

    def __init__(self, payload: bytes = b"\x07"):
        self.payload = payload

    def initial_state(self, node_id: int, neighbor_ids: Sequence[int]) -> None:
        return None

    def step(self, ctx: NodeContext[None]) -> Step[None]:
        if ctx.round_number == 0:
            return Step(state=None, send={u: self.payload for u in ctx.neighbor_ids})
        return Step(state=None, halt=True, output=tuple(m.src for m in ctx.inbox))


class ChatterProgram(NodeProgram[None]):
    """Sends one byte to every neighbor for the given number of rounds, then halts."""

    def __init__(self, rounds: int):
        self.rounds = rounds

    def initial_state(self, node_id: int, neighbor_ids: Sequence[int]) -> None:
        return None

    def step(self, ctx: NodeContext[None]) -> Step[None]:
        if ctx.round_number == self.rounds:
            return Step(state=None, halt=True, output=len(ctx.inbox))
        return Step(state=None, send={u: b"\x01" for u in ctx.neighbor_ids})


class ForeverProgram(NodeProgram[int]):
    def initial_state(self, node_id: int, neighbor_ids: Sequence[int]) -> int:
        return 0

    def step(self, ctx: NodeContext[int]) -> Step[int]:
        return Step(state=ctx.state + 1)


class StrangerProgram(NodeProgram[None]):
    """Every node writes to node 1, adjacent or not."""

    def __init__(self, payload: object = b"\x00"):
        self.payload = payload

    def initial_state(self, node_id: int, neighbor_ids: Sequence[int]) -> None:
        return None

    def step(self, ctx: NodeContext[None]) -> Step[None]:
        send = {} if ctx.self_id == 1 else {1: self.payload}
        return Step(state=None, send=send, halt=True)


class TestRounds:
    def test_echo_takes_one_round(self, c6):
        result = run_synchronous(c6, EchoProgram())
        assert result.rounds_used == 1
        assert result.communication_rounds == 0
        assert result.outputs == {v: v for v in range(1, 7)}

    def test_broadcast_on_c6(self, c6):
        result = run_synchronous(c6, BroadcastProgram(), bandwidth_factor=2)
        assert result.outputs[1] == (2, 6)
        assert all(len(senders) == 2 for senders in result.outputs.values())
        # the receive-only round folds into the round that sent
        assert result.rounds_used == 1
        assert result.communication_rounds == 1

    def test_inbox_sorted_by_sender(self, star5):
        result = run_synchronous(star5, BroadcastProgram())
        assert result.outputs[1] == (2, 3, 4, 5, 6)

    def test_round_limit(self, triangle):
        with pytest.raises(RoundLimitError) as exc:
            run_synchronous(triangle, ForeverProgram(), max_rounds=5)
        assert exc.value.max_rounds == 5

    def test_limit_admits_the_receive_only_round(self, c6):
        result = run_synchronous(c6, BroadcastProgram(), max_rounds=1)
        assert result.rounds_used == 1

    def test_limit_counts_sending_rounds(self, c6):
        assert run_synchronous(c6, ChatterProgram(3), max_rounds=3).rounds_used == 3
        with pytest.raises(RoundLimitError):
            run_synchronous(c6, ChatterProgram(3), max_rounds=2)

    def test_isolated_graph_runs(self):
        result = run_synchronous(Graph.from_edges([], nodes=[4, 9]), EchoProgram())
        assert result.outputs == {4: 4, 9: 9}


class TestCongestContract:
    def test_limit_from_factor(self):
        assert bandwidth_bytes(6, 2) == 1
        assert bandwidth_bytes(6, 32) == 12
        assert bandwidth_bytes(1000, 32) == 40

    def test_oversized_payload(self, c6):
        with pytest.raises(BandwidthError) as exc:
            run_synchronous(c6, BroadcastProgram(b"\x00" * 4), bandwidth_factor=1)
        assert exc.value.size == 4
        assert exc.value.limit == 1
        assert exc.value.round_number == 0

    def test_non_neighbor(self, c6):
        with pytest.raises(ProtocolError):
            run_synchronous(c6, StrangerProgram())

    def test_non_bytes_payload(self, triangle):
        with pytest.raises(ProtocolError):
            run_synchronous(triangle, StrangerProgram(payload="x"))

    @pytest.mark.parametrize("kwargs", [{"bandwidth_factor": 0}, {"workers": 0}])
    def test_engine_parameters(self, c4, kwargs):
        with pytest.raises(ParameterError):
            SynchronousEngine(c4, **kwargs)

    def test_max_rounds_parameter(self, c4):
        with pytest.raises(ParameterError):
            run_synchronous(c4, EchoProgram(), max_rounds=0)


class TestCrashes:
    def test_crash_before_start(self, c6):
        result = run_synchronous(c6, BroadcastProgram(), faults=fault_plan([(3, 0)]))
        assert 3 not in result.outputs
        assert result.outputs[2] == (1,)
        assert result.outputs[4] == (5,)
        assert result.crashed_nodes == frozenset({3})

    def test_crash_drops_queued_messages(self, c6):
        result = run_synchronous(c6, BroadcastProgram(), faults=fault_plan([(3, 1)]))
        assert 3 not in result.outputs
        assert result.outputs[2] == (1,)

    def test_crashed_neighbor_is_not_addressable(self, c4):
        result = run_synchronous(c4, BroadcastProgram(), faults=fault_plan([(2, 0)]))
        assert result.outputs[1] == (4,)
        assert result.outputs[3] == (4,)

    def test_unknown_node_in_plan(self, c4):
        with pytest.raises(UnknownNodeError):
            run_synchronous(c4, EchoProgram(), faults=fault_plan([(9, 0)]))


class TestTraceAndWorkers:
    def test_trace_records_every_message(self, c6):
        result = run_synchronous(c6, BroadcastProgram(), record_trace=True)
        assert result.trace is not None
        assert len(result.trace) == 12
        lines = dump_trace_jsonl(result.trace).splitlines()
        assert json.loads(lines[0]) == {"round": 0, "src": 1, "dst": 2, "bytes": 1}

    def test_trace_off_by_default(self, c6):
        assert run_synchronous(c6, BroadcastProgram()).trace is None

    def test_empty_trace_dump(self):
        assert dump_trace_jsonl([]) == ""

    def test_workers_do_not_change_result(self):
        graph, _ = generate_udg(40, 0.3, seed=11)
        serial = SynchronousEngine(graph, record_trace=True).run(BroadcastProgram())
        pooled = SynchronousEngine(graph, record_trace=True, workers=4).run(BroadcastProgram())
        assert serial == pooled

    def test_repeated_runs_identical(self, c6):
        first = run_synchronous(c6, BroadcastProgram(), record_trace=True)
        assert run_synchronous(c6, BroadcastProgram(), record_trace=True) == first


class TestCodec:
    def test_id_bits(self):
        assert id_bits(1) == 1
        assert id_bits(7) == 3
        assert id_bits(8) == 4

    def test_width_for(self):
        assert width_for(0) == 1
        assert width_for(255) == 1
        assert width_for(256) == 2

    def test_ints(self):
        payload = encode_ints([1, 300, 0], 2)
        assert payload == b"\x00\x01\x01\x2c\x00\x00"
        assert decode_ints(payload, 2) == [1, 300, 0]

    def test_ragged_payload(self):
        with pytest.raises(ValueError):
            decode_ints(b"\x00\x01\x02", 2)


class TestFaultPlans:
    @pytest.mark.parametrize("pairs", [[(0, 1)], [(2, -1)], [(2, 0), (2, 3)]])
    def test_invalid_pairs(self, pairs):
        with pytest.raises(ParameterError):
            fault_plan(pairs)

    def test_crashed_by(self):
        plan = fault_plan([(1, 0), (2, 3)])
        assert plan.crashed_by(0) == frozenset({1})
        assert plan.crashed_by(3) == frozenset({1, 2})
        assert plan.crash_round(2) == 3
        assert plan.crash_round(5) is None

    def test_sample(self):
        nodes = range(1, 101)
        plan = FaultPlan.sample(nodes, 0.3, seed=4)
        assert plan == FaultPlan.sample(nodes, 0.3, seed=4)
        assert 0 < len(plan.nodes()) < 100
        assert FaultPlan.sample(nodes, 0.0, seed=4).nodes() == frozenset()
        assert FaultPlan.sample(nodes, 1.0, seed=4).nodes() == frozenset(nodes)

    def test_sample_probability_range(self):
        with pytest.raises(ParameterError):
            FaultPlan.sample([1, 2], 1.5, seed=0)

    def test_csv_file(self, tmp_path):
        plan = fault_plan([(3, 0), (1, 2)])
        path = tmp_path / "faults.csv"
        path.write_text(plan.dump(), encoding="utf-8")
        assert plan.dump().splitlines() == ["node,round", "1,2", "3,0"]
        assert load_fault_plan(path) == plan

    @pytest.mark.parametrize("text", ["vertex,round\n1,0\n", "node,round\n1,x\n", ""])
    def test_csv_errors(self, tmp_path, text):
        path = tmp_path / "faults.csv"
        path.write_text(text, encoding="utf-8")
        with pytest.raises(GraphFormatError):
            load_fault_plan(path)
