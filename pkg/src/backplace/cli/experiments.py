"""
Experiment runner behind the CLI.

Every experiment is a pure function of its ExperimentConfig: it builds the
topology, runs one algorithm and returns the artifact files as strings, so
the same config always yields byte-identical files.

Usage:
    config = ExperimentConfig(topology="cycle", n=4, algorithm="kbp", k=1)
    topology = build_topology(config)
    outcome = run_experiment(config, topology.graph)
    outcome.files["summary.json"]
"""

from __future__ import annotations

import csv
import io
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from ..core.analysis import neighborhood_independence, structural_report
from ..core.edgelist import dump_edge_list, dump_layout_csv, read_edge_list
from ..core.errors import ParameterError
from ..core.generators import (
    DEFAULT_MIN_DEGREE_FRACTION,
    GeometricLayout,
    generate_bounded_growth,
    generate_complete,
    generate_cycle,
    generate_path,
    generate_star,
    generate_udg,
)
from ..core.graph import Graph
from ..placement.metrics import backup_coverage, compute_loads, survivability
from ..placement.modulo import run_kbp
from ..placement.oracle import optimal_max_load
from ..runtime.engine import DEFAULT_MAX_ROUNDS, dump_trace_jsonl
from ..runtime.faults import FaultPlan, load_fault_plan
from ..scheduling.efficient import efficient_vm
from ..scheduling.extended import extended_vm
from ..scheduling.ledger import ledger_report
from .config import ExperimentConfig

logger = logging.getLogger(__name__)


# =============================================================================
# Summary
# =============================================================================


class RunSummary(BaseModel):
    """summary.json: headline numbers of one run. Gains are exact "p/q" strings."""
    model_config = ConfigDict(populate_by_name=True)

    algorithm: str
    node_count: int = Field(alias="nodeCount")
    edge_count: int = Field(alias="edgeCount")
    k: Optional[int] = None
    r: Optional[int] = Field(None, alias="R")
    rounds_used: int = Field(alias="roundsUsed")
    neighborhood_independence: Optional[int] = Field(None, alias="neighborhoodIndependence")
    max_load: Optional[int] = Field(None, alias="maxLoad")
    c_times_k: Optional[int] = Field(None, alias="cTimesK")
    memory: Optional[str] = None
    min_gain: Optional[str] = Field(None, alias="minGain")
    median_gain: Optional[str] = Field(None, alias="medianGain")
    max_gain: Optional[str] = Field(None, alias="maxGain")
    phase_count: Optional[int] = Field(None, alias="phaseCount")
    color_count: Optional[int] = Field(None, alias="colorCount")
    colors_per_class: Optional[int] = Field(None, alias="colorsPerClass")
    coloring_rounds: Optional[int] = Field(None, alias="coloringRounds")
    coloring_hop_radius: Optional[int] = Field(None, alias="coloringHopRadius")
    coloring_graph: Optional[str] = Field(None, alias="coloringGraph")
    surviving_fraction: Optional[float] = Field(None, alias="survivingFraction")
    optimal_max_load: Optional[int] = Field(None, alias="optimalMaxLoad")

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=2) + "\n"


@dataclass
class Topology:
    graph: Graph
    layout: Optional[GeometricLayout] = None


@dataclass
class ExperimentOutcome:
    """Artifact files by name, plus the parsed summary."""
    summary: RunSummary
    files: dict[str, str] = field(default_factory=dict)


# =============================================================================
# Topology
# =============================================================================


def _need(value: Any, flag: str, topology: str) -> Any:
    if value is None:
        raise ParameterError(f"topology '{topology}' needs --{flag}")
    return value


def build_topology(config: ExperimentConfig) -> Topology:
    """
    Graph (and layout, for geometric generators) described by config.

    Raises:
        ParameterError: missing or invalid generator parameters
        GraphFormatError: unreadable edge-list file
    """
    config.check_topology()
    layout: Optional[GeometricLayout] = None
    name = config.topology
    if config.graph is not None:
        graph = read_edge_list(config.graph)
    elif name == "udg":
        graph, layout = generate_udg(
            _need(config.n, "n", name), _need(config.radius, "radius", name), config.seed
        )
    elif name == "bounded":
        fraction = config.min_degree_fraction
        graph, layout = generate_bounded_growth(
            _need(config.n, "n", name),
            _need(config.radius, "radius", name),
            config.seed,
            min_degree_fraction=DEFAULT_MIN_DEGREE_FRACTION if fraction is None else fraction,
        )
    elif name == "cycle":
        graph = generate_cycle(_need(config.n, "n", name))
    elif name == "star":
        graph = generate_star(_need(config.leaves, "leaves", name))
    elif name == "path":
        graph = generate_path(_need(config.n, "n", name))
    else:
        graph = generate_complete(_need(config.n, "n", name))

    if config.drop_isolated and graph.isolated_nodes():
        keep = [v for v in graph.sorted_nodes() if graph.degree(v) > 0]
        logger.info(f"dropping {graph.node_count - len(keep)} isolated node(s)")
        graph = graph.induced(keep)
        if layout is not None:
            layout = GeometricLayout(
                positions={v: layout.positions[v] for v in keep}, radius=layout.radius
            )
    return Topology(graph=graph, layout=layout)


def generate_files(topology: Topology) -> dict[str, str]:
    """graph.edges, layout.csv (geometric only) and report.json."""
    files = {"graph.edges": dump_edge_list(topology.graph)}
    if topology.layout is not None:
        files["layout.csv"] = dump_layout_csv(topology.layout)
    report = structural_report(topology.graph)
    files["report.json"] = report.model_dump_json(by_alias=True, indent=2) + "\n"
    return files


# =============================================================================
# Algorithms
# =============================================================================


def _fault_plan(config: ExperimentConfig, graph: Graph) -> Optional[FaultPlan]:
    if config.faults is not None:
        plan = load_fault_plan(config.faults)
        plan.check_nodes(graph.nodes)
        return plan
    if config.crash_probability is not None:
        return FaultPlan.sample(graph.nodes, config.crash_probability, config.seed)
    return None


def _run_kbp(config: ExperimentConfig, graph: Graph, max_rounds: int) -> ExperimentOutcome:
    k = config.k
    assert k is not None
    placement, run = run_kbp(
        graph,
        k,
        bandwidth_factor=config.bandwidth_factor,
        max_rounds=max_rounds,
        record_trace=config.trace,
    )
    c = neighborhood_independence(graph)
    loads = compute_loads(graph, placement, c)
    summary = RunSummary(
        algorithm="kbp",
        node_count=graph.node_count,
        edge_count=graph.edge_count,
        k=k,
        rounds_used=run.rounds_used,
        neighborhood_independence=c,
        max_load=loads.max_load,
        c_times_k=loads.c_times_k,
    )
    files = {
        "graph.edges": dump_edge_list(graph),
        "placement.json": placement.model_dump_json(indent=2) + "\n",
        "loads.csv": loads.to_csv(),
    }

    plan = _fault_plan(config, graph)
    if plan is not None:
        survival = survivability(graph, placement, plan.nodes())
        summary.surviving_fraction = backup_coverage(survival)
        files["faults.csv"] = plan.dump()
    if config.oracle:
        optimum = optimal_max_load(graph, k)
        summary.optimal_max_load = optimum.optimal_max_load
        files["oracle.json"] = optimum.to_json() + "\n"
    if config.trace and run.trace is not None:
        files["trace.jsonl"] = dump_trace_jsonl(run.trace)
    files["summary.json"] = summary.to_json()
    return ExperimentOutcome(summary=summary, files=files)


def _run_efficient(config: ExperimentConfig, graph: Graph, max_rounds: int) -> ExperimentOutcome:
    k = config.k
    assert k is not None
    result = efficient_vm(
        graph,
        k,
        max_rounds=max_rounds,
        memory=config.memory,
        bandwidth_factor=config.bandwidth_factor,
    )
    c = neighborhood_independence(graph)
    loads = compute_loads(graph, result.placement, c)
    gains = ledger_report(result.ledger)
    summary = RunSummary(
        algorithm="efficient-vm",
        node_count=graph.node_count,
        edge_count=graph.edge_count,
        k=k,
        rounds_used=result.schedule.total_rounds,
        neighborhood_independence=c,
        max_load=loads.max_load,
        c_times_k=loads.c_times_k,
        memory=str(result.schedule.memory),
        min_gain=str(gains.min_gain),
        median_gain=str(gains.median_gain),
        max_gain=str(gains.max_gain),
        phase_count=len(result.schedule.phases),
        color_count=result.coloring.color_count,
        coloring_rounds=result.coloring.rounds_used,
        coloring_hop_radius=result.coloring.hop_radius,
        coloring_graph="selection",
    )
    files = {
        "graph.edges": dump_edge_list(graph),
        "placement.json": result.placement.model_dump_json(indent=2) + "\n",
        "loads.csv": loads.to_csv(),
        "coloring.csv": result.coloring.to_csv(),
        "schedule.json": result.schedule.to_json() + "\n",
        "ledger.csv": gains.csv,
        "summary.json": summary.to_json(),
    }
    return ExperimentOutcome(summary=summary, files=files)


def _run_extended(config: ExperimentConfig, graph: Graph, max_rounds: int) -> ExperimentOutcome:
    r = config.r
    assert r is not None
    result = extended_vm(
        graph,
        r,
        max_rounds=max_rounds,
        memory=config.memory,
        bandwidth_factor=config.bandwidth_factor,
    )
    gains = ledger_report(result.ledger)
    summary = RunSummary(
        algorithm="extended-vm",
        node_count=graph.node_count,
        edge_count=graph.edge_count,
        r=r,
        rounds_used=result.schedule.total_rounds,
        memory=str(result.schedule.memory),
        min_gain=str(gains.min_gain),
        median_gain=str(gains.median_gain),
        max_gain=str(gains.max_gain),
        phase_count=len(result.schedule.phases),
        color_count=result.coloring.color_count,
        colors_per_class=result.partition.colors_per_class,
        coloring_rounds=result.coloring.rounds_used,
        coloring_hop_radius=result.coloring.hop_radius,
        coloring_graph="input",
    )
    files = {
        "graph.edges": dump_edge_list(graph),
        "coloring.csv": result.coloring.to_csv(),
        "partition.csv": result.partition.to_csv(),
        "schedule.json": result.schedule.to_json() + "\n",
        "ledger.csv": gains.csv,
        "summary.json": summary.to_json(),
    }
    return ExperimentOutcome(summary=summary, files=files)


def run_experiment(config: ExperimentConfig, graph: Graph) -> ExperimentOutcome:
    """
    Run the configured algorithm on graph.

    Raises:
        ParameterError: missing algorithm parameter or unmet precondition
        BackplaceError: anything raised by the algorithm itself
    """
    config.check()
    max_rounds = config.max_rounds if config.max_rounds is not None else DEFAULT_MAX_ROUNDS
    runners = {
        "kbp": _run_kbp,
        "efficient-vm": _run_efficient,
        "extended-vm": _run_extended,
    }
    outcome = runners[config.algorithm or ""](config, graph, max_rounds)
    logger.info(f"{config.algorithm} on {graph!r}: {outcome.summary.rounds_used} round(s)")
    return outcome


# =============================================================================
# Sweeps
# =============================================================================

SWEEP_COLUMNS = [
    "seed",
    "parameter",
    "value",
    "nodeCount",
    "edgeCount",
    "roundsUsed",
    "maxLoad",
    "cTimesK",
    "minGain",
    "medianGain",
    "maxGain",
    "phaseCount",
    "colorCount",
]


def parse_seed_range(text: str) -> range:
    """
    "A:B" -> seeds A..B-1; a bare "A" -> just A.

    Raises:
        ParameterError: malformed or empty range
    """
    try:
        if ":" in text:
            start, stop = (int(part) for part in text.split(":", 1))
        else:
            start = int(text)
            stop = start + 1
    except ValueError:
        raise ParameterError(f"seed range must look like A:B, got '{text}'") from None
    if stop <= start:
        raise ParameterError(f"empty seed range '{text}'")
    return range(start, stop)


def parse_int_list(text: str, flag: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ParameterError(f"--{flag} must be a comma-separated list of integers, got '{text}'") from None
    if not values:
        raise ParameterError(f"--{flag} is empty")
    return values


def _sweep_task(task: tuple[dict[str, Any], int, str, int]) -> dict[str, Any]:
    data, seed, parameter, value = task
    config = ExperimentConfig.from_dict({**data, "seed": seed, parameter: value})
    topology = build_topology(config)
    summary = run_experiment(config, topology.graph).summary
    row = summary.model_dump(by_alias=True)
    row.update({"seed": seed, "parameter": parameter, "value": value})
    return {column: row.get(column) for column in SWEEP_COLUMNS}


def sweep(
    config: ExperimentConfig,
    seeds: Sequence[int],
    parameter: str,
    values: Sequence[int],
    workers: int = 1,
) -> list[dict[str, Any]]:
    """
    One summary row per (seed, value), ordered by seed then value.

    Raises:
        ParameterError: empty seeds or values, or workers < 1
    """
    if not seeds or not values:
        raise ParameterError("sweep needs at least one seed and one parameter value")
    if workers < 1:
        raise ParameterError(f"workers must be >= 1, got {workers}")
    data = config.to_dict()
    data.pop(parameter, None)
    tasks = [(data, seed, parameter, value) for seed in sorted(seeds) for value in sorted(values)]
    if workers == 1:
        rows = [_sweep_task(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_task, tasks))
    rows.sort(key=lambda row: (row["seed"], row["value"]))
    return rows


def rows_to_csv(rows: Sequence[dict[str, Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: "" if v is None else v for k, v in row.items()})
    return buffer.getvalue()
