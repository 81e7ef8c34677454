"""
Backplace CLI - generate topologies, run algorithms, verify and sweep.
"""

from __future__ import annotations

from .main import app, main

__all__ = ["main", "app"]
