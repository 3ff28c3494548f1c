#!/usr/bin/env python3
"""
CLI Controller - argument parsing and one handler per command
"""

import argparse
import logging
import math
import re
from typing import Any, Callable, Dict

import pandas as pd
from pydantic import ValidationError

from ..config import PRESETS, load_params, preset
from ..constants import ORACLE_SCAN_MAX, ORACLE_WEAK_FIELD, SWEEP_WORKERS
from ..errors import ConfigError
from ..models import IndexConvention, Overlap, RunConfig, SweepSpec
from ..services.gate import build_truth_table, is_universal
from ..services.oracle import oracle_check
from ..services.propagation import phase_table, wrong_polarization_check
from ..services.search import find_density, find_length, sweep
from ..services.susceptibility import susceptibility_report
from .output import Payload, flatten

logger = logging.getLogger(__name__)

ANGLE = re.compile(r"^\s*([0-9.eE+-]*)\s*\*?\s*pi\s*(?:/\s*([0-9.eE+]+))?\s*$")


class ConfigErrorParser(argparse.ArgumentParser):
    """Usage errors become ConfigError so they map to exit code 1"""

    def error(self, message):
        raise ConfigError(f"{self.prog}: {message}")


def parse_angle(text: str) -> float:
    """A float or a multiple/fraction of pi: 'pi', '2pi', 'pi/2', '0.5*pi'"""
    match = ANGLE.match(text)
    try:
        if match is None:
            return float(text)
        coefficient = match.group(1)
        factor = float(coefficient + "1") if coefficient in ("", "+", "-") else float(coefficient)
        divisor = float(match.group(2)) if match.group(2) else 1.0
        return factor * math.pi / divisor
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an angle: {text!r}") from exc


# =============================================================================
# PARSER
# =============================================================================

def _common(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--config", help="JSON config with TripodParams field names as keys")
    source.add_argument("--preset", choices=sorted(PRESETS), help="named parameter set")
    parser.add_argument(
        "--format", dest="output_format", choices=["text", "json", "csv"], default=None,
        help="text (default; csv for sweep), json or csv",
    )
    parser.add_argument("--out", default=None, help="write output to FILE instead of stdout")
    parser.add_argument("--overlap", choices=[o.value for o in Overlap], default=Overlap.MATCHED.value)
    parser.add_argument(
        "--convention", choices=[c.value for c in IndexConvention], default=IndexConvention.SI.value
    )
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = ConfigErrorParser(
        prog="tripod-qpg",
        description="Tripod-EIT cross-Kerr polarization phase gate calculator",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=ConfigErrorParser)

    for name, text in (
        ("susceptibility", "linear and cross-Kerr susceptibilities"),
        ("phases", "vacuum, linear and nonlinear phase shifts"),
        ("truth-table", "gate truth table, conditional phase and universality"),
        ("window", "probe transparency window and wrong-polarization margin"),
    ):
        _common(commands.add_parser(name, help=text))

    for name, text in (
        ("find-length", "interaction length giving the target conditional phase"),
        ("find-density", "atom density giving the target conditional phase"),
    ):
        sub = commands.add_parser(name, help=text)
        _common(sub)
        sub.add_argument("--target", type=parse_angle, default=math.pi, help="radians, e.g. pi")

    sub = commands.add_parser("sweep", help="pipeline over a one-parameter grid (CSV)")
    _common(sub)
    sub.add_argument("--param", required=True)
    sub.add_argument("--start", type=float, required=True)
    sub.add_argument("--stop", type=float, required=True)
    sub.add_argument("--points", type=int, required=True)
    sub.add_argument("--scale", choices=["linear", "log"], default="linear")
    sub.add_argument("--workers", type=int, default=SWEEP_WORKERS)

    sub = commands.add_parser("oracle-check", help="analytic vs density-matrix susceptibilities")
    _common(sub)
    sub.add_argument("--weak-field", type=float, default=ORACLE_WEAK_FIELD)
    sub.add_argument("--scan-max", type=float, default=ORACLE_SCAN_MAX)
    return parser


def run_config(args: argparse.Namespace) -> RunConfig:
    if args.config:
        params, source = load_params(args.config), args.config
    else:
        name = args.preset or "quantum"
        params, source = preset(name), f"preset {name}"
    output_format = args.output_format or ("csv" if args.command == "sweep" else "text")
    return RunConfig(
        params=params,
        output_format=output_format,
        out=args.out,
        overlap=Overlap(args.overlap),
        convention=IndexConvention(args.convention),
        source=source,
    )


# =============================================================================
# HANDLERS
# =============================================================================

def handle_susceptibility(config: RunConfig, args: argparse.Namespace) -> Payload:
    return flatten(susceptibility_report(config.params).model_dump())


def handle_phases(config: RunConfig, args: argparse.Namespace) -> Payload:
    return phase_table(config.params, config.overlap, config.convention).model_dump()


def handle_truth_table(config: RunConfig, args: argparse.Namespace) -> Payload:
    table = build_truth_table(phase_table(config.params, config.overlap, config.convention))
    report = is_universal(table)
    return {
        "theta_mm": table.theta_mm,
        "theta_mp": table.theta_mp,
        "theta_pp": table.theta_pp,
        "theta_pm": table.theta_pm,
        "phi_conditional": table.conditional_phase,
        "universal": report.universal,
        "witness": report.witness,
    }


def handle_window(config: RunConfig, args: argparse.Namespace) -> Payload:
    margin = wrong_polarization_check(config.params)
    return {"window": margin.window, "zeeman_split": config.params.zeeman_split,
            "ratio": margin.ratio, "valid": margin.valid}


def _search(solver: Callable, parameter: str) -> Callable[[RunConfig, argparse.Namespace], Payload]:
    def handler(config: RunConfig, args: argparse.Namespace) -> Payload:
        result = solver(config.params, args.target, config.overlap)
        solved = config.params.replace(**{parameter: result.value})
        payload: Dict[str, Any] = {
            parameter: result.value,
            "target": args.target,
            "monotone": result.monotone,
        }
        payload.update(phase_table(solved, config.overlap, config.convention).model_dump())
        return payload

    return handler


def handle_sweep(config: RunConfig, args: argparse.Namespace) -> Payload:
    try:
        spec = SweepSpec(
            parameter=args.param, start=args.start, stop=args.stop,
            points=args.points, scale=args.scale,
        )
    except ValidationError as exc:
        raise ConfigError(f"invalid sweep: {exc.errors()[0]['msg']}") from exc
    return sweep(config.params, spec, config.overlap, workers=args.workers)


def handle_oracle_check(config: RunConfig, args: argparse.Namespace) -> Payload:
    rows = oracle_check(config.params, args.weak_field, args.scan_max)
    records = []
    for row in rows:
        record = flatten({
            "beam": row.beam,
            "detuning": row.detuning,
            "chi1_analytic": row.chi1_analytic,
            "chi1_oracle": row.chi1_oracle,
            "chi3_analytic": row.chi3_analytic,
            "chi3_oracle": row.chi3_oracle,
            "ratio_analytic": row.chi3_ratio_analytic,
            "ratio_oracle": row.chi3_ratio_oracle,
        })
        record.update(ratio_error_re=row.ratio_error_re, ratio_error_im=row.ratio_error_im,
                      fit_residual=row.fit_residual)
        records.append(record)
    return pd.DataFrame(records)


COMMANDS: Dict[str, Callable[[RunConfig, argparse.Namespace], Payload]] = {
    "susceptibility": handle_susceptibility,
    "phases": handle_phases,
    "truth-table": handle_truth_table,
    "window": handle_window,
    "find-length": _search(find_length, "length"),
    "find-density": _search(find_density, "density"),
    "sweep": handle_sweep,
    "oracle-check": handle_oracle_check,
}


def dispatch(config: RunConfig, args: argparse.Namespace) -> Payload:
    logger.info("running %s with %s", args.command, config.source)
    return COMMANDS[args.command](config, args)
