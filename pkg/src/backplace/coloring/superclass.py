"""
Super-classes: R contiguous color ranges of ⌈colorCount / R⌉ colors each.
"""

from __future__ import annotations

import math

from ..core.errors import ParameterError
from .types import SuperClassPartition


def partition_super_classes(color_count: int, r: int) -> SuperClassPartition:
    """
    Split colors 0..color_count-1 into r super-classes.

    Class s holds [s·w, min((s+1)·w, color_count)) with w = ⌈color_count / r⌉,
    so trailing classes may be short or empty.

    Raises:
        ParameterError: r outside [1, color_count]
    """
    if color_count < 1:
        raise ParameterError(f"color_count must be >= 1, got {color_count}")
    if not 1 <= r <= color_count:
        raise ParameterError(f"R must be in [1, {color_count}], got {r}")
    width = math.ceil(color_count / r)
    return SuperClassPartition(
        class_of={c: c // width for c in range(color_count)},
        class_count=r,
        colors_per_class=width,
    )
