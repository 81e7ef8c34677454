"""
Experiment configuration: a flat YAML mapping whose keys mirror the long
command-line flags.

Example backplace.yaml:
    topology: udg
    n: 50
    radius: 0.3
    seed: 42
    drop-isolated: true
    k: 2
    bandwidth-factor: 32

Values given on the command line override values from the file.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Optional, Union

import yaml

from ..core.errors import ParameterError
from ..runtime.engine import DEFAULT_BANDWIDTH_FACTOR

GENERATORS = ("udg", "bounded", "cycle", "star", "path", "complete")
ALGORITHMS = ("kbp", "efficient-vm", "extended-vm")


@dataclass
class ExperimentConfig:
    """One experiment: a topology source, an algorithm and its parameters."""
    # Topology: a generator or an edge-list file, never both
    topology: Optional[str] = None
    graph: Optional[str] = None
    n: Optional[int] = None
    radius: Optional[float] = None
    seed: int = 0
    leaves: Optional[int] = None
    min_degree_fraction: Optional[float] = None
    drop_isolated: bool = False

    # Algorithm
    algorithm: Optional[str] = None
    k: Optional[int] = None
    r: Optional[int] = None
    memory: str = "1"
    bandwidth_factor: int = DEFAULT_BANDWIDTH_FACTOR
    max_rounds: Optional[int] = None

    # Extras for kbp
    faults: Optional[str] = None
    crash_probability: Optional[float] = None
    oracle: bool = False
    trace: bool = False

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ExperimentConfig":
        """Create config from a flat mapping; keys may use '-' or '_'."""
        known = {f.name for f in fields(cls)}
        values: dict[str, Any] = {}
        for key, value in data.items():
            name = str(key).replace("-", "_")
            if name not in known:
                raise ParameterError(f"unknown config key '{key}'")
            values[name] = value
        if values.get("memory") is not None:
            values["memory"] = str(values["memory"])
        return cls(**values)

    def to_dict(self) -> dict[str, Any]:
        """Flat mapping with flag-style keys, unset values omitted."""
        return {
            f.name.replace("_", "-"): getattr(self, f.name)
            for f in fields(self)
            if getattr(self, f.name) is not None
        }

    def merged(self, overrides: dict[str, Any]) -> "ExperimentConfig":
        """Copy with every non-None override applied."""
        data = {f.name: getattr(self, f.name) for f in fields(self)}
        for key, value in overrides.items():
            if value is not None and key in data:
                data[key] = value
        return ExperimentConfig(**data)

    def save(self, path: Union[Path, str] = "backplace.yaml") -> None:
        """Save configuration to YAML file."""
        content = yaml.safe_dump(self.to_dict(), default_flow_style=False, sort_keys=False)
        Path(path).write_text(content, encoding="utf-8")

    def check_topology(self) -> None:
        """
        Raises:
            ParameterError: no topology source, or two of them
        """
        if (self.topology is None) == (self.graph is None):
            raise ParameterError("give exactly one topology source: --topology or --graph")
        if self.topology is not None and self.topology not in GENERATORS:
            raise ParameterError(f"unknown topology '{self.topology}', expected one of {GENERATORS}")

    def check(self) -> None:
        """
        Raises:
            ParameterError: missing topology or algorithm parameter
        """
        self.check_topology()
        if self.algorithm not in ALGORITHMS:
            raise ParameterError(f"unknown algorithm '{self.algorithm}', expected one of {ALGORITHMS}")
        if self.algorithm in ("kbp", "efficient-vm") and self.k is None:
            raise ParameterError(f"{self.algorithm} needs --k")
        if self.algorithm == "extended-vm" and self.r is None:
            raise ParameterError("extended-vm needs --r")
        if self.faults is not None and self.crash_probability is not None:
            raise ParameterError("give --faults or --crash-probability, not both")


def load_config(path: Union[Path, str]) -> ExperimentConfig:
    """
    Load configuration from a YAML file.

    Raises:
        OSError: file cannot be read
        ParameterError: not a flat mapping, or unknown keys
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ParameterError(f"{path}: not valid YAML: {e}") from None
    if data is None:
        return ExperimentConfig()
    if not isinstance(data, dict):
        raise ParameterError(f"{path}: config must be a mapping of flag names to values")
    return ExperimentConfig.from_dict(data)
