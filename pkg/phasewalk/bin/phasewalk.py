#!/usr/bin/env python3
"""
phasewalk: compute and cross-check the phase-parameterized coined walk.

Usage:
  phasewalk simulate --tau1 0.5 --tau2 0 --steps 100 --initial 0.70710678,0,0,0.70710678
  phasewalk compare --tau1 3/4 --tau2 1/2 --steps 100 --initial symmetric -o fig3.csv
  phasewalk density --tau1 0.5 --tau2 0 --steps 2000 --format json
  phasewalk --list

Exit status is 0 on success, 2 for usage errors and 3 when a numeric
precondition fails (for example a degenerate coin passed to ``compare``).
"""

import argparse
import logging
import sys

from phasewalk.config import COMMANDS, FORMATS, RunConfig
from phasewalk.errors import ConfigError, DomainError
from phasewalk.output import write_table
from phasewalk.registry import get_registry
from phasewalk.version import __version__

log = logging.getLogger("phasewalk")

EXIT_USAGE = 2
EXIT_DOMAIN = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phasewalk",
        description="Exact, spectral, asymptotic and limit-law routes for the HTH-coined walk",
    )
    parser.add_argument("command", nargs="?", choices=COMMANDS, help="what to compute")
    parser.add_argument("--list", action="store_true", help="list the available commands and exit")
    parser.add_argument("--version", action="version", version=f"phasewalk {__version__}")
    parser.add_argument("--tau1", default="1/2", help="first coin phase in [0, 1], decimal or fraction (default: 1/2)")
    parser.add_argument("--tau2", default="0", help="second coin phase in [0, 1] (default: 0)")
    parser.add_argument("--steps", "-t", type=int, default=100, help="number of steps t (default: 100)")
    parser.add_argument(
        "--initial",
        default="symmetric",
        help="initial coin state as re,im,re,im for (left, right) "
             "or one of left, right, symmetric, balanced-i (default: symmetric)",
    )
    parser.add_argument("--output", "-o", help="output file (default: stdout)")
    parser.add_argument("--format", choices=FORMATS, default="csv", help="output format (default: csv)")
    parser.add_argument("--nodes", type=int, help="quadrature nodes for the spectral route (default: max(4t+8, 256))")
    parser.add_argument(
        "--two-saddle",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="include the second stationary point of each branch (default: on)",
    )
    parser.add_argument("--seed", type=int, help="random seed for sampled checks")
    parser.add_argument("--grid", type=int, default=401, help="grid size for density and spectrum (default: 401)")
    parser.add_argument("--margin", type=float, default=0.01, help="caustic margin as a fraction of |a|/2 (default: 0.01)")
    parser.add_argument("--every", type=int, default=10, help="row spacing in steps for moments (default: 10)")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true", help="log debug output")
    verbosity.add_argument("--quiet", "-q", action="store_true", help="log warnings only")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        tau1=args.tau1,
        tau2=args.tau2,
        steps=args.steps,
        initial=args.initial,
        output=args.output,
        format=args.format,
        nodes=args.nodes,
        two_saddle=args.two_saddle,
        seed=args.seed,
        grid=args.grid,
        margin=args.margin,
        every=args.every,
    )


def run(config: RunConfig) -> int:
    config.validate()
    registered = get_registry().get(config.command)
    log.debug("running %s with %s", config.command, config.as_dict())
    table = registered.function(config)
    write_table(table, config.output or sys.stdout, config.format)
    if config.output:
        log.info("wrote %d rows to %s", len(table.rows), config.output)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    logging.basicConfig(
        level=level,
        format="[phasewalk] %(message)s",
        stream=sys.stderr,
    )

    if args.list:
        for registered in get_registry().describe():
            print(f"{registered.name:<12} {registered.help}")
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        log.error("a command is required (use --list to see them)")
        return EXIT_USAGE

    try:
        return run(config_from_args(args))
    except ConfigError as exc:
        for problem in exc.problems:
            log.error("%s", problem)
        return EXIT_USAGE
    except DomainError as exc:
        log.error("%s", exc)
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
