#!/usr/bin/env python3
"""
Backplace CLI - Main entry point.

Usage:
    backplace generate udg --n 50 --radius 0.3 --seed 42 --out graphs/udg42
    backplace run kbp --graph graphs/udg42/graph.edges --k 2 --out runs/kbp
    backplace run extended-vm --topology bounded --n 60 --radius 0.9 --r 4 --out runs/ext
    backplace verify runs/kbp
    backplace sweep kbp --topology udg --n 50 --radius 0.3 --seeds 0:20 --k 1,2,3

Exit codes: 0 success, 1 invariant violation, 2 usage or parameter error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional

from ..core.errors import BackplaceError, ParameterError, ValidationError
from .artifacts import load_artifacts, write_artifacts
from .checks import format_table, verify_run
from .config import ALGORITHMS, GENERATORS, ExperimentConfig, load_config
from .experiments import (
    build_topology,
    generate_files,
    parse_int_list,
    parse_seed_range,
    rows_to_csv,
    run_experiment,
    sweep,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _experiment_config(args: argparse.Namespace, **extra: Any) -> ExperimentConfig:
    """File config (if any) overridden by every flag given on the command line."""
    base = load_config(args.config) if getattr(args, "config", None) else ExperimentConfig()
    overrides = {
        "topology": getattr(args, "topology", None),
        "graph": getattr(args, "graph", None),
        "n": getattr(args, "n", None),
        "radius": getattr(args, "radius", None),
        "seed": getattr(args, "seed", None),
        "leaves": getattr(args, "leaves", None),
        "min_degree_fraction": getattr(args, "min_degree_fraction", None),
        "drop_isolated": getattr(args, "drop_isolated", None),
        "k": getattr(args, "k", None),
        "r": getattr(args, "r", None),
        "memory": getattr(args, "memory", None),
        "bandwidth_factor": getattr(args, "bandwidth_factor", None),
        "max_rounds": getattr(args, "max_rounds", None),
        "faults": getattr(args, "faults", None),
        "crash_probability": getattr(args, "crash_probability", None),
        "oracle": getattr(args, "oracle", None),
        "trace": getattr(args, "trace", None),
    }
    overrides.update(extra)
    return base.merged(overrides)


def cmd_generate(args: argparse.Namespace) -> int:
    """Generate a topology and its structural report."""
    config = _experiment_config(args, topology=args.generator, graph=None)
    topology = build_topology(config)
    paths = write_artifacts(args.out, generate_files(topology))
    for path in paths:
        print(f"Created {path}")
    return EXIT_OK


def cmd_run(args: argparse.Namespace) -> int:
    """Run one algorithm and write its artifacts."""
    config = _experiment_config(args, algorithm=args.algorithm)
    config.check()
    topology = build_topology(config)
    outcome = run_experiment(config, topology.graph)
    write_artifacts(args.out, outcome.files)
    print(outcome.files["summary.json"], end="")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Re-check every invariant against a run directory."""
    artifacts = load_artifacts(args.directory, graph_path=args.graph)
    results = verify_run(artifacts)
    print(format_table(results))
    failed = [r.name for r in results if r.failed]
    if failed:
        print(f"\nFAILED: {', '.join(failed)}")
        return EXIT_INVALID
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    """Run an algorithm over a seed range and a parameter list."""
    config = _experiment_config(args, algorithm=args.algorithm, k=None, r=None)
    if (args.k is None) == (args.r is None):
        raise ParameterError("give exactly one of --k or --r as the swept parameter")
    parameter, raw = ("k", args.k) if args.k is not None else ("r", args.r)
    rows = sweep(
        config,
        list(parse_seed_range(args.seeds)),
        parameter,
        parse_int_list(raw, parameter),
        workers=args.workers,
    )
    text = rows_to_csv(rows)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"Wrote {len(rows)} row(s) to {args.out}")
    return EXIT_OK


# =============================================================================
# Parser
# =============================================================================


def _add_topology_flags(parser: argparse.ArgumentParser, with_source: bool) -> None:
    group = parser.add_argument_group("topology")
    if with_source:
        group.add_argument("--topology", choices=GENERATORS, default=None, help="Generator name")
        group.add_argument("--graph", default=None, help="Edge-list file instead of a generator")
    group.add_argument("--n", type=int, default=None, help="Number of nodes")
    group.add_argument("--radius", type=float, default=None, help="UDG connection radius")
    group.add_argument("--seed", type=int, default=None, help="PRNG seed (default 0)")
    group.add_argument("--leaves", type=int, default=None, help="Star leaves")
    group.add_argument(
        "--min-degree-fraction", type=float, default=None,
        help="Bounded growth: accept draws with δ >= fraction·Δ (default 0.5)",
    )
    group.add_argument(
        "--drop-isolated", action="store_true", default=None,
        help="Keep only nodes with at least one neighbor",
    )


def _add_algorithm_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("algorithm")
    group.add_argument("--memory", default=None, help="Physical memory M per node, e.g. 1 or 3/2")
    group.add_argument("--bandwidth-factor", type=int, default=None, help="Message limit factor (default 32)")
    group.add_argument("--max-rounds", type=int, default=None, help="Engine round limit")


def create_parser() -> argparse.ArgumentParser:
    """Create CLI argument parser."""
    parser = argparse.ArgumentParser(
        prog="backplace",
        description="Backplace - K-backup placement and virtual-memory scheduling in CONGEST",
    )
    parser.add_argument("--version", action="version", version="%(prog)s 0.1.0")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="More logging (repeatable)")
    parser.add_argument("-q", "--quiet", action="store_true", help="Only errors")

    config_parent = argparse.ArgumentParser(add_help=False)
    config_parent.add_argument("--config", default=None, help="YAML file of flag values")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # generate
    generate_parser = subparsers.add_parser("generate", help="Generate a topology")
    generate_sub = generate_parser.add_subparsers(dest="generator", required=True)
    for name in GENERATORS:
        gen = generate_sub.add_parser(name, parents=[config_parent], help=f"{name} topology")
        _add_topology_flags(gen, with_source=False)
        gen.add_argument("--out", default=".", help="Output directory")

    # run
    run_parser = subparsers.add_parser("run", help="Run an algorithm")
    run_sub = run_parser.add_subparsers(dest="algorithm", required=True)
    for name in ALGORITHMS:
        run = run_sub.add_parser(name, parents=[config_parent], help=f"Run {name}")
        _add_topology_flags(run, with_source=True)
        _add_algorithm_flags(run)
        if name == "extended-vm":
            run.add_argument("--r", type=int, default=None, help="Number of super-classes R")
        else:
            run.add_argument("--k", type=int, default=None, help="Backups per node K")
        if name == "kbp":
            run.add_argument("--faults", default=None, help="Crash plan CSV (node,round)")
            run.add_argument("--crash-probability", type=float, default=None, help="Sample a crash plan")
            run.add_argument("--oracle", action="store_true", default=None, help="Also compute the optimum")
            run.add_argument("--trace", action="store_true", default=None, help="Write trace.jsonl")
        run.add_argument("--out", default=".", help="Output directory")

    # verify
    verify_parser = subparsers.add_parser("verify", help="Re-check a run directory")
    verify_parser.add_argument("directory", help="Directory written by 'backplace run'")
    verify_parser.add_argument("--graph", default=None, help="Edge list (default DIRECTORY/graph.edges)")

    # sweep
    sweep_parser = subparsers.add_parser("sweep", parents=[config_parent], help="Parameter sweep to CSV")
    sweep_parser.add_argument("algorithm", choices=ALGORITHMS)
    _add_topology_flags(sweep_parser, with_source=True)
    _add_algorithm_flags(sweep_parser)
    sweep_parser.add_argument("--seeds", required=True, help="Seed range A:B (B exclusive)")
    sweep_parser.add_argument("--k", default=None, help="Comma-separated K values")
    sweep_parser.add_argument("--r", default=None, help="Comma-separated R values")
    sweep_parser.add_argument("--workers", type=int, default=1, help="Parallel processes")
    sweep_parser.add_argument("--out", default="-", help="CSV file (default stdout)")

    return parser


def _configure_logging(verbose: int, quiet: bool) -> None:
    if quiet:
        level = logging.ERROR
    elif verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def app(args: Optional[List[str]] = None) -> int:
    """Main CLI application."""
    parser = create_parser()
    parsed = parser.parse_args(args)
    _configure_logging(parsed.verbose, parsed.quiet)

    if not parsed.command:
        parser.print_help()
        return EXIT_OK

    commands = {
        "generate": cmd_generate,
        "run": cmd_run,
        "verify": cmd_verify,
        "sweep": cmd_sweep,
    }

    handler = commands.get(parsed.command)
    if handler is None:
        parser.print_help()
        return EXIT_USAGE

    try:
        return handler(parsed)
    except ValidationError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except BackplaceError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_IO
    except (KeyError, TypeError, ValueError) as e:
        logger.debug("unhandled input error", exc_info=True)
        print(f"Error: malformed input: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    """Entry point for CLI."""
    sys.exit(app())


if __name__ == "__main__":
    main()
