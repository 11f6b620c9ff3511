#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Command line entry point for the reaction network toolkit

Reports go to stdout as JSON (CSV for trajectories); logs go to stderr.
Exit codes: 0 success or property true, 1 property false, hypothesis
failure or infeasible, 2 usage or parse error, 3 internal invariant
violation.
"""

import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import List, Optional

from config.config import load_all_configs
from crn_analysis import CrnError, HypothesisError, InternalInvariantError
from models import report_schema
from pipeline_helpers import (
    build_check_report,
    build_disguised_report,
    build_equiv_report,
    build_realize_report,
    handle_command_failure,
    load_network,
    parse_state,
    require_rates,
    run_simulation,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crn_cli.py",
        description="Structural checks, weakly reversible realizations and disguised toric locus for reaction networks"
    )
    parser.add_argument("--config", help="YAML configuration file (default: config/config.yaml)")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="structural report for one network")
    check.add_argument("file")

    realize = commands.add_parser("realize", help="weakly reversible realization of a rated network")
    realize.add_argument("file")
    realize.add_argument("--mode", choices=["auto", "2d", "highdim"], default=None,
                         help="auto keeps a weakly reversible input as is; 2d and highdim force their construction")
    realize.add_argument("--out", help="write the realized network file here")
    realize.add_argument("--probe", type=int, default=0, help="random rate vectors to try on the constructed graph")

    disguised = commands.add_parser("disguised", help="flux LP for the disguised toric locus")
    disguised.add_argument("file")
    disguised.add_argument("--at", help="positive state x1,x2,... for the fixed-state membership LP")

    equiv = commands.add_parser("equiv", help="exact and numeric dynamical equivalence of two rated networks")
    equiv.add_argument("file1")
    equiv.add_argument("file2")
    equiv.add_argument("--samples", type=int, default=None)

    simulate = commands.add_parser("simulate", help="integrate the mass-action system")
    simulate.add_argument("file")
    simulate.add_argument("--x0", required=True, help="initial state x1,x2,...")
    simulate.add_argument("--t-end", type=float, required=True)
    simulate.add_argument("--tol", type=float, default=None)
    simulate.add_argument("--out", help="CSV destination (default: stdout)")

    commands.add_parser("schema", help="print the JSON schema of every report")
    return parser


def _emit(report) -> None:
    print(report.model_dump_json(indent=2))


def run_command(args: argparse.Namespace, config: dict) -> int:
    max_hyperplanes = config['endotactic']['max_hyperplanes']

    if args.command == "schema":
        print(json.dumps(report_schema(), indent=2))
        return EXIT_OK

    if args.command == "check":
        G, k = load_network(args.file)
        report = build_check_report(G, k, max_hyperplanes)
        _emit(report)
        return EXIT_OK if report.endotactic else EXIT_FALSE

    if args.command == "realize":
        G, k = load_network(args.file)
        settings = config['realization']
        report, result = build_realize_report(
            G, require_rates(k, "realize"),
            mode=args.mode or settings['mode'],
            max_hyperplanes=max_hyperplanes,
            kappa_fraction=Fraction(str(settings['kappa_fraction'])),
            probe_trials=args.probe
        )
        _emit(report)
        if result is None:
            return EXIT_FALSE
        if args.out:
            with open(args.out, 'w', encoding='utf-8') as f:
                f.write(report.network)
            logger.info(f"Realized network written to {args.out}")
        return EXIT_OK

    if args.command == "disguised":
        G, k = load_network(args.file)
        at = parse_state(args.at) if args.at else None
        report = build_disguised_report(G, k, at)
        _emit(report)
        if not report.feasible or report.membership is False:
            return EXIT_FALSE
        return EXIT_OK

    if args.command == "equiv":
        G, k = load_network(args.file1)
        G2, k2 = load_network(args.file2)
        settings = config['equivalence']
        report = build_equiv_report(
            G, require_rates(k, "equiv"), G2, require_rates(k2, "equiv"),
            samples=args.samples or settings['samples'],
            box=tuple(settings['box']),
            seed=settings['seed']
        )
        _emit(report)
        return EXIT_OK if report.exact else EXIT_FALSE

    if args.command == "simulate":
        G, k = load_network(args.file)
        settings = config['simulation']
        x0 = [float(v) for v in parse_state(args.x0)]
        trajectory = run_simulation(
            G, require_rates(k, "simulate"), x0, args.t_end,
            tol=args.tol or settings['tol'],
            floor=settings['positivity_floor'],
            max_step=settings['max_step']
        )
        if args.out:
            trajectory.to_csv(args.out)
            logger.info(f"Trajectory with {len(trajectory.times)} rows written to {args.out}")
        else:
            sys.stdout.write(trajectory.to_csv())
        return EXIT_OK

    raise ValueError(f"Unknown command: {args.command}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = load_all_configs(args.config)

    level = logging.DEBUG if args.verbose else getattr(logging, str(config['logging']['level']).upper(), logging.INFO)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    try:
        return run_command(args, config)
    except InternalInvariantError as e:
        handle_command_failure(args.command, e)
        return EXIT_INTERNAL
    except HypothesisError as e:
        handle_command_failure(args.command, e)
        return EXIT_FALSE
    except (CrnError, ValueError, OSError) as e:
        handle_command_failure(args.command, e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
