"""
Memory ledger: what each node can use while it is active.

All amounts are exact Fractions of the uniform physical memory M.
"""

from __future__ import annotations

import csv
import io
import statistics
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

from ..core.errors import GraphFormatError, ParameterError
from ..core.graph import NodeId
from .types import Schedule, parse_fraction

DEFAULT_MEMORY = 1


def as_memory(value: Any) -> Fraction:
    """
    Raises:
        ParameterError: not a positive rational
    """
    try:
        memory = Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ParameterError(f"memory must be a positive rational, got {value!r}") from None
    if memory <= 0:
        raise ParameterError(f"memory must be > 0, got {memory}")
    return memory


@dataclass(frozen=True)
class MemoryLedger:
    """
    virtual_of[v]: sum of the shares v receives in its active phase.
    gain_of[v]: virtual_of[v] / M.
    """
    memory: Fraction
    virtual_of: Mapping[NodeId, Fraction]

    @property
    def gain_of(self) -> dict[NodeId, Fraction]:
        return {v: amount / self.memory for v, amount in self.virtual_of.items()}

    @classmethod
    def from_schedule(cls, schedule: Schedule) -> "MemoryLedger":
        """Sum each node's granted shares over the phase where it is active."""
        virtual: dict[NodeId, Fraction] = {}
        for phase in schedule.phases:
            for v in phase.active:
                if v in virtual:
                    continue
                virtual[v] = sum(
                    (phase.shares[(v, u)] for u in phase.targets_of(v)),
                    Fraction(0),
                )
        return cls(memory=schedule.memory, virtual_of=dict(sorted(virtual.items())))

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["node", "virtual", "gain"])
        gains = self.gain_of
        for v in sorted(self.virtual_of):
            writer.writerow([v, str(self.virtual_of[v]), str(gains[v])])
        return buffer.getvalue()

    @classmethod
    def from_csv(cls, text: str, memory: Fraction) -> "MemoryLedger":
        """
        Raises:
            GraphFormatError: bad header or row
        """
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or [c.strip() for c in rows[0]] != ["node", "virtual", "gain"]:
            raise GraphFormatError("header must be node,virtual,gain", 1)
        virtual: dict[NodeId, Fraction] = {}
        for lineno, row in enumerate(rows[1:], start=2):
            if not row:
                continue
            if len(row) != 3:
                raise GraphFormatError(f"expected 3 fields, got {len(row)}", lineno)
            try:
                node = int(row[0])
            except ValueError:
                raise GraphFormatError(f"bad node ID {row[0]!r}", lineno) from None
            virtual[node] = parse_fraction(row[1])
        return cls(memory=memory, virtual_of=virtual)


@dataclass(frozen=True)
class LedgerSummary:
    """Gain statistics over all nodes."""
    min_gain: Fraction
    median_gain: Fraction
    max_gain: Fraction
    csv: str

    def to_dict(self) -> dict[str, str]:
        return {
            "minGain": str(self.min_gain),
            "medianGain": str(self.median_gain),
            "maxGain": str(self.max_gain),
        }


def ledger_report(ledger: MemoryLedger) -> LedgerSummary:
    gains = list(ledger.gain_of.values())
    if not gains:
        zero = Fraction(0)
        return LedgerSummary(min_gain=zero, median_gain=zero, max_gain=zero, csv=ledger.to_csv())
    return LedgerSummary(
        min_gain=min(gains),
        median_gain=Fraction(statistics.median(gains)),
        max_gain=max(gains),
        csv=ledger.to_csv(),
    )
