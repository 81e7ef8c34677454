"""
Re-validation of a run directory for `backplace verify`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from ..coloring.verify import coloring_conflicts
from ..core.analysis import neighborhood_independence, selection_subgraph
from ..core.errors import ValidationError
from ..placement.metrics import compute_loads
from ..scheduling.checks import check_ledger, check_schedule
from .artifacts import RunArtifacts

Status = Literal["pass", "fail", "skip"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: Status
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status == "fail"


def _result(name: str, problems: list[str]) -> CheckResult:
    if not problems:
        return CheckResult(name, "pass")
    more = f" (+{len(problems) - 1} more)" if len(problems) > 1 else ""
    return CheckResult(name, "fail", problems[0] + more)


def verify_run(artifacts: RunArtifacts) -> list[CheckResult]:
    """One result per invariant family; missing artifacts are skipped."""
    graph = artifacts.graph
    results: list[CheckResult] = []
    placement = artifacts.placement
    placement_ok = False

    if placement is None:
        results.append(CheckResult("placement", "skip", "no placement.json"))
        results.append(CheckResult("load-bound", "skip", "no placement.json"))
    else:
        problems = placement.problems(graph)
        placement_ok = not problems
        results.append(_result("placement", problems))
        if placement_ok:
            c = neighborhood_independence(graph)
            loads = compute_loads(graph, placement, c)
            load_problems = []
            if not loads.within_bound:
                load_problems.append(f"max load {loads.max_load} exceeds c*k = {loads.c_times_k}")
            if artifacts.loads_csv is not None and artifacts.loads_csv != loads.to_csv():
                load_problems.append("loads.csv disagrees with the recomputed loads")
            results.append(_result("load-bound", load_problems))
        else:
            results.append(CheckResult("load-bound", "skip", "placement invalid"))

    coloring = artifacts.coloring
    if coloring is None:
        results.append(CheckResult("coloring", "skip", "no coloring.csv"))
    elif artifacts.summary.get("coloringGraph") == "selection" and not placement_ok:
        results.append(CheckResult("coloring", "skip", "selection graph needs a valid placement"))
    else:
        target = graph
        if artifacts.summary.get("coloringGraph") == "selection" and placement is not None:
            target = selection_subgraph(graph, placement)
        try:
            results.append(_result("coloring", coloring_conflicts(target, coloring)))
        except ValidationError as e:
            results.append(_result("coloring", list(e.errors)))

    schedule = artifacts.schedule
    if schedule is None:
        results.append(CheckResult("schedule", "skip", "no schedule.json"))
        results.append(CheckResult("ledger", "skip", "no schedule.json"))
    else:
        results.append(
            _result(
                "schedule",
                check_schedule(
                    graph,
                    schedule,
                    placement=placement if placement_ok else None,
                    coloring=coloring,
                    partition=artifacts.partition,
                ),
            )
        )
        if artifacts.ledger is None:
            results.append(CheckResult("ledger", "skip", "no ledger.csv"))
        else:
            results.append(_result("ledger", check_ledger(schedule, artifacts.ledger)))
    return results


def format_table(results: list[CheckResult]) -> str:
    width = max((len(r.name) for r in results), default=0)
    lines = [f"{r.name:<{width}}  {r.status.upper():<4}  {r.detail}".rstrip() for r in results]
    return "\n".join(lines)
