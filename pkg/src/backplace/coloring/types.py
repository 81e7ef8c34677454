"""
Coloring and super-class partition types, with their CSV formats.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Mapping

from ..core.errors import GraphFormatError, ParameterError

NodeId = int


@dataclass(frozen=True)
class Coloring:
    """
    Total map node -> color in [0, color_count).

    hop_radius 1: adjacent nodes differ. hop_radius 2: nodes within distance
    two differ. rounds_used is the number of synchronous rounds spent
    producing it, including the rounds of any coloring it was derived from.
    """
    colors: Mapping[NodeId, int]
    color_count: int
    hop_radius: int = 1
    rounds_used: int = 0

    def __post_init__(self) -> None:
        if self.hop_radius not in (1, 2):
            raise ParameterError(f"hop_radius must be 1 or 2, got {self.hop_radius}")

    def classes(self) -> dict[int, list[NodeId]]:
        """Non-empty color classes, ascending by color."""
        out: dict[int, list[NodeId]] = {}
        for v in sorted(self.colors):
            out.setdefault(self.colors[v], []).append(v)
        return dict(sorted(out.items()))

    @property
    def used_colors(self) -> int:
        return len(set(self.colors.values()))

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["node", "color"])
        for v in sorted(self.colors):
            writer.writerow([v, self.colors[v]])
        return buffer.getvalue()

    @classmethod
    def from_csv(
        cls,
        text: str,
        color_count: int,
        hop_radius: int = 1,
        rounds_used: int = 0,
    ) -> "Coloring":
        colors: dict[NodeId, int] = {}
        for lineno, row in _rows(text, ["node", "color"]):
            node, color = row
            if node in colors:
                raise GraphFormatError(f"node {node} colored twice", lineno)
            colors[node] = color
        return cls(colors=colors, color_count=color_count, hop_radius=hop_radius, rounds_used=rounds_used)


@dataclass(frozen=True)
class SuperClassPartition:
    """Contiguous color ranges, one per super-class."""
    class_of: Mapping[int, int]
    class_count: int
    colors_per_class: int

    def colors_in(self, super_class: int) -> list[int]:
        return [c for c in sorted(self.class_of) if self.class_of[c] == super_class]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["color", "superclass"])
        for color in sorted(self.class_of):
            writer.writerow([color, self.class_of[color]])
        return buffer.getvalue()

    @classmethod
    def from_csv(cls, text: str, class_count: int) -> "SuperClassPartition":
        class_of: dict[int, int] = {}
        for lineno, (color, super_class) in _rows(text, ["color", "superclass"]):
            if color in class_of:
                raise GraphFormatError(f"color {color} assigned twice", lineno)
            class_of[color] = super_class
        sizes = [list(class_of.values()).count(s) for s in range(class_count)]
        return cls(class_of=class_of, class_count=class_count, colors_per_class=max(sizes, default=0))


def _rows(text: str, header: list[str]) -> list[tuple[int, tuple[int, int]]]:
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    if not rows or [c.strip() for c in rows[0]] != header:
        raise GraphFormatError(f"header must be {','.join(header)}", 1)
    parsed = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        try:
            a, b = (int(c) for c in row)
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {row}", lineno) from None
        parsed.append((lineno, (a, b)))
    return parsed
