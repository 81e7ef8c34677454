"""
Node-side contract of the synchronous engine.

A NodeProgram sees only its NodeContext: its own ID, its live neighbors,
the round number, the messages delivered this round and its private state.
It answers with a Step: payloads per neighbor, the new state, and whether it
halts (with an output).
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Generic, Sequence, TypeVar

NodeId = int
S = TypeVar("S")


@dataclass(frozen=True)
class Message:
    """One delivered payload on edge {src, dst}."""
    src: NodeId
    dst: NodeId
    payload: bytes


@dataclass(frozen=True)
class NodeContext(Generic[S]):
    """Everything a node may read in one round."""
    self_id: NodeId
    neighbor_ids: tuple[NodeId, ...]
    round_number: int
    inbox: tuple[Message, ...]
    state: S
    bandwidth_bytes: int


@dataclass
class Step(Generic[S]):
    """What a node does at the end of its round."""
    state: S
    send: dict[NodeId, bytes] = field(default_factory=dict)
    halt: bool = False
    output: Any = None


class NodeProgram(ABC, Generic[S]):
    """
    Per-node step function.

    Subclasses must not keep per-node data on self: everything that changes
    lives in the state returned through Step.
    """

    @abstractmethod
    def initial_state(self, node_id: NodeId, neighbor_ids: Sequence[NodeId]) -> S:
        """State before round 0."""

    @abstractmethod
    def step(self, ctx: NodeContext[S]) -> Step[S]:
        """One synchronous round."""


# =============================================================================
# Bandwidth and wire codec
# =============================================================================


def id_bits(n: int) -> int:
    """⌈log₂(n + 1)⌉, the bits needed to name one of n nodes."""
    return max(1, math.ceil(math.log2(n + 1)))


def bandwidth_bytes(n: int, bandwidth_factor: int) -> int:
    """Per-message payload limit: ⌈bandwidth_factor · ⌈log₂(n + 1)⌉ / 8⌉ bytes."""
    return math.ceil(bandwidth_factor * id_bits(n) / 8)


def width_for(max_value: int) -> int:
    """Bytes needed for one fixed-width integer in [0, max_value]."""
    return max(1, (max(0, max_value).bit_length() + 7) // 8)


def encode_ints(values: Sequence[int], width: int) -> bytes:
    """Fixed-width big-endian encoding of non-negative integers."""
    return b"".join(int(v).to_bytes(width, "big") for v in values)


def decode_ints(payload: bytes, width: int) -> list[int]:
    if len(payload) % width:
        raise ValueError(f"payload of {len(payload)} bytes is not a multiple of width {width}")
    return [int.from_bytes(payload[i:i + width], "big") for i in range(0, len(payload), width)]
