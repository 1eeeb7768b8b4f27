#!/usr/bin/env python3
"""CLI for solving piecewise-constant potential stacks and emitting plot-ready data."""

import argparse
import sys
import time
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.errors import ProximityWellsError, EigenstateNotFoundError
from core.logging_config import configure_logging
from core.output_formatter import ResultOutputFormatter, format_value
from core.settings import settings
from projects.proximity_wells.config.run_config import Command, RunConfig, load_config_file
from projects.proximity_wells.models import BoundaryCondition, Normalization
from projects.proximity_wells.runners import run_sweep, run_validation
from projects.proximity_wells.solvers import (
    build_wavefunction,
    count_nodes,
    find_eigenvalues,
    gap_minimum,
    layer_probabilities,
    sample,
)

SOLVE_COLUMNS = ["index", "E", "nodes", "proximity_valid", "below_barrier"]
SWEEP_COLUMNS = ["V", "E", "branch"]
WAVEFUNCTION_COLUMNS = ["x", "psi", "dpsi"]


def stack_summary(config: RunConfig) -> dict:
    stack = config.build_stack()
    return {
        "layers": [[layer.potential, layer.width] for layer in stack.layers],
        "left_bc": stack.left_bc.value,
        "right_bc": stack.right_bc.value,
    }


def cmd_solve(config: RunConfig, pretty: bool = False) -> str:
    """Eigenvalue table of the configured stack."""
    stack = config.build_stack()
    window = config.energy_window(stack)
    rows = [
        {
            "index": i,
            "E": ev.energy,
            "nodes": ev.node_count,
            "proximity_valid": ev.proximity_valid,
            "below_barrier": ev.below_barrier,
        }
        for i, ev in enumerate(find_eigenvalues(stack, window))
    ]

    if pretty:
        title = config.layers or f"{config.periods or 1} period(s), V={config.potential:g}, {stack.left_bc.value}"
        ResultOutputFormatter.display_eigenvalues(title, rows, (window.lo, window.hi))
        return ""
    if config.output_format == "json":
        return ResultOutputFormatter.to_json(
            {"stack": stack_summary(config), "window": [window.lo, window.hi], "eigenvalues": rows}
        )
    comments = [] if rows else [f"note: no eigenvalues in ({format_value(window.lo)}, {format_value(window.hi)})"]
    return ResultOutputFormatter.to_csv(rows, SOLVE_COLUMNS, comments)


def cmd_sweep(config: RunConfig) -> str:
    """Lowest eigenvalue of each branch over a grid of barrier heights."""
    table = run_sweep(config.v_min, config.v_max, config.steps, grid_points=config.grid_points)
    rows = [{"V": row.potential, "E": row.energy, "branch": row.branch.value} for row in table.rows]

    if config.output_format == "json":
        return ResultOutputFormatter.to_json({"rows": rows})
    return ResultOutputFormatter.to_csv(rows, SWEEP_COLUMNS)


def cmd_wavefunction(config: RunConfig) -> str:
    """Sampled eigenfunction for the eigenvalue at ``--index``."""
    stack = config.build_stack()
    window = config.energy_window(stack)
    eigenvalues = find_eigenvalues(stack, window)
    if config.index >= len(eigenvalues):
        raise EigenstateNotFoundError(
            f"eigenstate {config.index} not found: {len(eigenvalues)} eigenvalue(s) in "
            f"({window.lo:g}, {window.hi:g})"
        )

    energy = eigenvalues[config.index].energy
    wf = build_wavefunction(stack, energy, config.normalization)
    frame = sample(wf, config.samples)

    if config.output_format == "json":
        nodes = count_nodes(wf)
        return ResultOutputFormatter.to_json({
            "E": energy,
            "normalization": wf.normalization.value,
            "nodes": nodes,
            "gap_minimum": gap_minimum(wf, config.samples) if nodes == 0 else None,
            "layer_probabilities": layer_probabilities(wf),
            "samples": {column: [float(v) for v in frame[column]] for column in WAVEFUNCTION_COLUMNS},
        })
    return ResultOutputFormatter.to_csv(
        frame.to_dict("records"), WAVEFUNCTION_COLUMNS, [f"E={format_value(energy)}"]
    )


def cmd_validate(config: RunConfig) -> tuple[str, bool]:
    """Run the registered checks; returns (output, all passed)."""
    start = time.time()
    report = run_validation(config.validation_scope())
    outcomes = [outcome.model_dump(mode="json") for outcome in report.outcomes]

    if config.output_format == "json":
        return ResultOutputFormatter.to_json({"passed": report.passed, "checks": outcomes}), report.passed
    ResultOutputFormatter.display_validation_report(outcomes, time.time() - start)
    return "", report.passed


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per operation."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--periods", type=int, help="Number of (well, barrier) periods")
    common.add_argument("--v", dest="potential", type=float, help="Barrier potential V")
    common.add_argument("--config", help="JSON file of run settings; flags given on the command line win")
    common.add_argument("--bc", choices=[bc.value for bc in BoundaryCondition],
                        help="End condition at both walls (default: dirichlet)")
    common.add_argument("--right-bc", choices=[bc.value for bc in BoundaryCondition],
                        help="End condition at the right wall, overriding --bc")
    common.add_argument("--layers", help="Hand-built stack as potential:width pairs, e.g. 0:1,5:1")
    common.add_argument("--window-lo", type=float, help="Lower end of the energy window (default 0)")
    common.add_argument("--window-hi", type=float, help="Upper end of the energy window (default: max V)")
    common.add_argument("--grid-points", type=int, help="Scan grid size override")
    common.add_argument("--format", dest="output_format", choices=["csv", "json"],
                        help=f"Output format (default: {settings.default_output_format})")
    common.add_argument("-o", "--output", help="Output file (default: standard output)")
    common.add_argument("--log-level", help="Log level (default from settings)")
    common.add_argument("--debug", action="store_true", help="Enable debug logging and tracebacks")

    parser = argparse.ArgumentParser(
        prog="proximity-wells",
        description="Eigenvalues and eigenfunctions of piecewise-constant potential stacks",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    solve = subparsers.add_parser("solve", parents=[common], help="List eigenvalues in a window")
    solve.add_argument("-p", "--pretty", action="store_true", help="Terminal table instead of CSV/JSON")

    sweep = subparsers.add_parser("sweep", parents=[common], help="Energy versus barrier height")
    sweep.add_argument("--v-min", type=float, help=f"Lowest barrier height (default: {settings.sweep_v_min:g})")
    sweep.add_argument("--v-max", type=float, help=f"Highest barrier height (default: {settings.sweep_v_max:g})")
    sweep.add_argument("--steps", type=int, help=f"Number of barrier heights (default: {settings.sweep_steps})")

    wf = subparsers.add_parser("wf", aliases=["wavefunction"], parents=[common], help="Sample an eigenfunction")
    wf.add_argument("--index", type=int, help="Eigenvalue index in the window (default 0)")
    wf.add_argument("--samples", type=int, help=f"Number of samples (default: {settings.default_samples})")
    wf.add_argument("--normalization", choices=[n.value for n in Normalization],
                    help="l2, max or raw (default: l2 for Dirichlet walls, max otherwise)")

    subparsers.add_parser("validate", parents=[common], help="Run the solver cross-checks")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    command = Command.WAVEFUNCTION if args.command in ("wf", "wavefunction") else Command(args.command)
    fields = load_config_file(args.config) if args.config else {}
    fields.update(
        (key, value)
        for key, value in vars(args).items()
        if key in RunConfig.model_fields and value is not None
    )
    fields["command"] = command
    return RunConfig(**fields)


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI function; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging("DEBUG" if args.debug else args.log_level)

    try:
        config = config_from_args(args)
    except (ValidationError, ValueError, OSError) as e:
        print(f"Error: invalid configuration: {e}", file=sys.stderr)
        return 2

    try:
        passed = True
        if config.command == Command.SOLVE:
            text = cmd_solve(config, pretty=args.pretty)
        elif config.command == Command.SWEEP:
            text = cmd_sweep(config)
        elif config.command == Command.WAVEFUNCTION:
            text = cmd_wavefunction(config)
        else:
            text, passed = cmd_validate(config)

        if text:
            ResultOutputFormatter.write(text, config.output)
        return 0 if passed else 1

    except ProximityWellsError as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        if args.debug:
            import traceback
            traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
