# contnorm/cli/main.py
"""
Command-line entry point.

    contnorm sweep   --config run.yaml [--out rows.csv] [--format csv|json] [--reports reports.csv]
    contnorm verify  --config run.yaml [--out reports.json] [--format csv|json]
    contnorm overlap --config run.yaml --k 1.0 --kprime 1.3 [--x1 -1 --x2 1]

Exit codes: 0 success, 1 a verification missed its tolerance, 2 config
error, 3 numerical failure. An output file that cannot be written is
reported on stderr as "cannot write output" and shares exit code 2 with
config errors: both are fixed by editing the invocation, not the numerics.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np
from tabulate import tabulate

# imports
from contnorm.cli.config import RunConfig, load_config
from contnorm.cli.emit import FORMATS, emit
from contnorm.cli.sweep import (EXIT_CONFIG_ERROR, EXIT_NUMERICAL_FAILURE, EXIT_OK, REPORT_COLUMNS,
                                SWEEP_COLUMNS, SweepResult, run_sweep, run_verification)
from contnorm.continuum.matching import outer_grid, resample
from contnorm.continuum.normalization import normalized_state
from contnorm.continuum.overlap import overlap, overlap_quadrature
from contnorm.errors import ConfigError, ContNormError
from contnorm.logging_config import get_logger, set_level

logger = get_logger(__name__)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contnorm",
        description="Delta-normalized continuum states of symmetric finite-range 1D potentials (hbar = 1).")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    sweep = commands.add_parser("sweep", help="Tabulate A(k), phase shift and normalization over the k-grid")
    sweep.add_argument("--config", type=Path, required=True, help="YAML run config")
    sweep.add_argument("--out", type=Path, help="Sweep table destination (default: output.path)")
    sweep.add_argument("--format", choices=FORMATS, help="Output format (default: output.format)")
    sweep.add_argument("--reports", type=Path, help="Verification report destination")

    verify = commands.add_parser("verify", help="Run only the verification blocks of a config")
    verify.add_argument("--config", type=Path, required=True, help="YAML run config")
    verify.add_argument("--out", type=Path, help="Report destination")
    verify.add_argument("--format", choices=FORMATS, help="Output format (default: output.format)")

    pair = commands.add_parser("overlap", help="Compare Wronskian and quadrature overlaps for one (k, k') pair")
    pair.add_argument("--config", type=Path, required=True, help="YAML run config")
    pair.add_argument("--k", type=float, required=True, help="Wavenumber of the first state")
    pair.add_argument("--kprime", type=float, required=True, help="Wavenumber of the second state")
    pair.add_argument("--x1", type=float, help="Lower limit (default: -x_b)")
    pair.add_argument("--x2", type=float, help="Upper limit (default: x_b)")
    return parser


def _print_outcomes(result: SweepResult) -> None:
    if result.outcomes:
        table = [outcome.as_record() for outcome in result.outcomes]
        print(tabulate(table, headers="keys", floatfmt=".6g"))
    for failure in result.failures:
        print(f"FAILED k={failure.k:g} ({failure.parity}): {failure.message}", file=sys.stderr)


def _cmd_sweep(args: argparse.Namespace, config: RunConfig) -> int:
    result = run_sweep(config)
    fmt = args.format or config.output.format
    out = args.out or config.output.path
    reports = args.reports or config.output.reports

    headers = list(SWEEP_COLUMNS[:5]) + ["A_arg"] + list(SWEEP_COLUMNS[5:])
    table = [[getattr(row, name) for name in headers] for row in result.rows]
    print(tabulate(table, headers=headers, floatfmt=".10g"))
    _print_outcomes(result)

    if out is not None:
        emit([row.as_record() for row in result.rows], fmt, out, SWEEP_COLUMNS)
        logger.info("wrote %d row(s) to %s", len(result.rows), out)
    if reports is not None:
        emit([outcome.as_record() for outcome in result.outcomes], fmt, reports, REPORT_COLUMNS)
    return result.exit_code


def _cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    if config.verify.delta is None and config.verify.completeness is None:
        print("config has no verification blocks", file=sys.stderr)
    result = run_verification(config)
    _print_outcomes(result)
    if args.out is not None:
        fmt = args.format or config.output.format
        emit([outcome.as_record() for outcome in result.outcomes], fmt, args.out, REPORT_COLUMNS)
    return result.exit_code


def overlap_grid(base: np.ndarray, x_b: float, step: float, limits: Sequence[float]) -> np.ndarray:
    """
    Shared grid holding the interior nodes, outer nodes up to the farthest
    limit and both |limits| themselves.
    """
    reach = max(abs(x) for x in limits)
    nodes = np.concatenate([base, outer_grid(x_b, step, reach), np.abs(limits)])
    return np.unique(nodes)


def _cmd_overlap(args: argparse.Namespace, config: RunConfig) -> int:
    potential = config.build_potential()
    solver = config.solver_config()
    x_a, x_b = potential.support()
    x1 = x_a if args.x1 is None else args.x1
    x2 = x_b if args.x2 is None else args.x2

    rows: List[List] = []
    for parity in config.parities():
        a = normalized_state(potential, args.k, parity, solver)
        b = normalized_state(potential, args.kprime, parity, solver)
        grid = overlap_grid(a.samples.xs[:a.samples.interior_count], x_b, solver.step, (x1, x2))
        sa = resample(a.samples, a.normalized_amplitude, grid)
        sb = resample(b.samples, b.normalized_amplitude, grid)
        boundary = overlap(sa, sb, x1, x2)
        quadrature = overlap_quadrature(sa, sb, x1, x2)
        rows.append([parity.value, boundary.method.value, boundary.value, quadrature.value,
                     boundary.value - quadrature.value])

    print(f"{potential.get_display_name()}, k={args.k:g}, k'={args.kprime:g}, interval [{x1:g}, {x2:g}]")
    print(tabulate(rows, headers=["parity", "method", "boundary", "quadrature", "difference"],
                   floatfmt=".12g"))
    return EXIT_OK


_COMMANDS = {
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
    "overlap": _cmd_overlap,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Process exit code
    """
    args = _build_parser().parse_args(argv)
    if args.verbose:
        set_level(logging.DEBUG)
    try:
        config = load_config(args.config)
        return _COMMANDS[args.command](args, config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except ContNormError as exc:
        logger.error("%s failed: %s", args.command, exc)
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL_FAILURE


if __name__ == "__main__":
    raise SystemExit(main())
