"""
Runtime module - synchronous CONGEST engine, node programs, fault plans.
"""

from __future__ import annotations

from .engine import (
    DEFAULT_BANDWIDTH_FACTOR,
    DEFAULT_MAX_ROUNDS,
    RunResult,
    SynchronousEngine,
    TraceRecord,
    dump_trace_jsonl,
    run_synchronous,
    write_trace_jsonl,
)
from .faults import FaultPlan, fault_plan, load_fault_plan
from .program import (
    Message,
    NodeContext,
    NodeProgram,
    Step,
    bandwidth_bytes,
    decode_ints,
    encode_ints,
    id_bits,
    width_for,
)

__all__ = [
    # Engine
    "DEFAULT_BANDWIDTH_FACTOR",
    "DEFAULT_MAX_ROUNDS",
    "RunResult",
    "SynchronousEngine",
    "TraceRecord",
    "dump_trace_jsonl",
    "run_synchronous",
    "write_trace_jsonl",
    # Faults
    "FaultPlan",
    "fault_plan",
    "load_fault_plan",
    # Node programs
    "Message",
    "NodeContext",
    "NodeProgram",
    "Step",
    "bandwidth_bytes",
    "decode_ints",
    "encode_ints",
    "id_bits",
    "width_for",
]
