"""
Custom exceptions for the backplace system.
"""

from __future__ import annotations

from typing import Iterable, Optional


class BackplaceError(Exception):
    """Base exception for all backplace errors."""
    pass


class ParameterError(BackplaceError):
    """Raised when an operation receives an out-of-range argument."""
    pass


class GraphFormatError(BackplaceError):
    """Raised when an edge list, layout, coloring or schedule file cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class SelfLoopError(GraphFormatError):
    """Raised when an edge joins a node to itself."""

    def __init__(self, node: int, line: Optional[int] = None):
        self.node = node
        super().__init__(f"self-loop on node {node}", line)


class DuplicateEdgeError(GraphFormatError):
    """Raised when the same undirected edge is given twice."""

    def __init__(self, u: int, v: int, line: Optional[int] = None):
        self.edge = (min(u, v), max(u, v))
        super().__init__(f"duplicate edge {self.edge[0]}-{self.edge[1]}", line)


class UnknownNodeError(BackplaceError):
    """Raised when a node ID is not part of the graph."""

    def __init__(self, node: int, context: str = "graph"):
        self.node = node
        super().__init__(f"node {node} is not part of the {context}")


class IsolatedNodeError(BackplaceError):
    """Raised when an operation needs every node to have a neighbor."""

    def __init__(self, nodes: Iterable[int]):
        self.nodes = sorted(nodes)
        super().__init__(f"isolated nodes have no backup candidates: {self.nodes}")


class IndependenceTooLargeError(BackplaceError):
    """Raised when the exact neighborhood-independence search exceeds its caps."""

    def __init__(self, node: int, size: int, reason: str):
        self.node = node
        self.size = size
        super().__init__(
            f"neighborhood of node {node} ({size} nodes) too large for exact independence: {reason}"
        )


class ValidationError(BackplaceError):
    """Raised when a placement, coloring, schedule or ledger breaks an invariant."""

    def __init__(self, errors: list[str]):
        self.errors = errors
        super().__init__(f"Validation failed: {errors}")


class SimulationError(BackplaceError):
    """Raised when a synchronous run cannot continue."""

    def __init__(self, message: str, round_number: Optional[int] = None):
        self.round_number = round_number
        where = f" in round {round_number}" if round_number is not None else ""
        super().__init__(f"Simulation failed{where}: {message}")


class BandwidthError(SimulationError):
    """Raised when a node sends a payload above the CONGEST limit."""

    def __init__(self, node: int, dst: int, round_number: int, size: int, limit: int):
        self.node = node
        self.dst = dst
        self.size = size
        self.limit = limit
        super().__init__(
            f"node {node} sent {size} bytes to {dst}, limit is {limit} bytes",
            round_number,
        )


class ProtocolError(SimulationError):
    """Raised when a node addresses a node that is not its current neighbor."""
    pass


class RoundLimitError(SimulationError):
    """Raised when a run does not terminate within max_rounds."""

    def __init__(self, max_rounds: int):
        self.max_rounds = max_rounds
        super().__init__(f"not all live nodes halted within {max_rounds} rounds", max_rounds)


class OracleError(BackplaceError):
    """Raised when the exact placement solver fails."""
    pass


class SearchSpaceError(OracleError):
    """Raised when an instance is above the configured solver size."""
    pass
