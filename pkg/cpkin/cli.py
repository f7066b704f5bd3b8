"""
Command line interface of :py:mod:`cpkin`

Each subcommand reads its inputs only from flags and JSON documents. Exit
codes are ``0`` on success, ``1`` if a verification fails, ``2`` for
invalid input and ``3`` for degenerate geometry.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__
from .utility import GeometryFailure, json_ready
from .api import import_instant, import_bobillier, BobillierRequest
from .plane.numbers import exp_i
from .kinematics.bobillier import (
    Case,
    BobillierConfig,
    bobillier_residual,
    bobillier_kinematic_check,
    dependence_coefficients,
    geometric_stations,
    route_difference,
    specialized_residual,
)
from .figures.plots import unit_circle_figure, instant_figure, write_figure
from .verify import run_battery, DEFAULT_P_VALUES, DEFAULT_CASES, DEFAULT_TOLERANCE


logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_GEOMETRY = 0, 1, 2, 3


def cmd_circle(options: argparse.Namespace) -> int:
    figure, rows = unit_circle_figure(options.p, options.samples)
    write_figure(figure, rows, options.out)
    return EXIT_OK


def cmd_inflection(options: argparse.Namespace) -> int:
    figure, rows = instant_figure(import_instant(options.config), options.t)
    write_figure(figure, rows, options.out)
    return EXIT_OK


def cmd_verify(options: argparse.Namespace) -> int:
    report = run_battery(
        p_values=options.p,
        seed=options.seed,
        cases=options.cases,
        tol=options.tol,
        timing=options.timing,
    )
    print(report.to_json())
    return EXIT_OK if report.passed else EXIT_FAILED


def bobillier_report(request: BobillierRequest) -> dict:
    """Evaluate a Bobillier request by the geometric and the kinematic route"""
    p = request.p
    if request.mode == "raw":
        cfg = request.config
        geometric = bobillier_residual(cfg)
        coefficients = dependence_coefficients(
            *(exp_i(station.theta.theta, p) for station in cfg.stations), p
        )
        kinematic = sum(
            rho_star * coefficient
            for rho_star, coefficient in zip(cfg.rho_stars, coefficients)
        )
        rho_star_difference = None
    else:
        m, t, angles = request.motion, request.t, request.angles
        cfg = BobillierConfig(p, geometric_stations(m, t, angles))
        geometric = bobillier_residual(cfg)
        kinematic = bobillier_kinematic_check(m, t, angles)
        rho_star_difference = route_difference(m, t, angles)
    specialized = None
    if p in (-1.0, 0.0, 1.0):
        specialized = specialized_residual(
            Case(p), cfg.rho_stars, [angle.theta for angle in cfg.angles]
        )
    return {
        "p": p,
        "mode": request.mode,
        "geometric_residual": geometric,
        "kinematic_residual": kinematic,
        "difference": geometric - kinematic,
        "rho_star_difference": rho_star_difference,
        "specialized_residual": specialized,
    }


def cmd_bobillier(options: argparse.Namespace) -> int:
    report = bobillier_report(import_bobillier(options.config))
    print(json.dumps(json_ready(report), indent=2, allow_nan=False))
    return EXIT_OK


CLI = argparse.ArgumentParser(
    prog="cpkin",
    description="Kinematics and inflection geometry of the generalized complex plane",
)
CLI.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
CLI.add_argument(
    "-v",
    "--verbose",
    action="count",
    default=0,
    help="log progress to stderr, repeat for debug output",
)
_commands = CLI.add_subparsers(dest="command", metavar="COMMAND")
_commands.required = True

_circle = _commands.add_parser("circle", help="draw the unit circle of C_p")
_circle.add_argument("--p", type=float, required=True, help="the plane parameter")
_circle.add_argument("--out", type=Path, default=Path("circle.svg"))
_circle.add_argument("--samples", type=int, default=256)
_circle.set_defaults(run=cmd_circle)

_inflection = _commands.add_parser(
    "inflection", help="draw the inflection geometry of an instant"
)
_inflection.add_argument(
    "--config", required=True, help="motion or canonical instant, path or resource"
)
_inflection.add_argument("--t", type=float, default=0.0, help="the instant")
_inflection.add_argument("--out", type=Path, default=Path("inflection.svg"))
_inflection.set_defaults(run=cmd_inflection)

_verify = _commands.add_parser("verify", help="run the property battery")
_verify.add_argument(
    "--p", type=float, nargs="+", default=list(DEFAULT_P_VALUES), metavar="P"
)
_verify.add_argument("--seed", type=int, default=42)
_verify.add_argument("--cases", type=int, default=DEFAULT_CASES)
_verify.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
_verify.add_argument(
    "--timing", action="store_true", help="record milliseconds spent per check"
)
_verify.set_defaults(run=cmd_verify)

_bobillier = _commands.add_parser(
    "bobillier", help="evaluate the Bobillier relation by both routes"
)
_bobillier.add_argument("--config", required=True, help="path or resource")
_bobillier.set_defaults(run=cmd_bobillier)


def main(argv: Optional[List[str]] = None) -> int:
    options = CLI.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level={0: logging.WARNING, 1: logging.INFO}.get(options.verbose, logging.DEBUG),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return options.run(options)
    except GeometryFailure as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_GEOMETRY
    except (ValueError, OSError) as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_INPUT
