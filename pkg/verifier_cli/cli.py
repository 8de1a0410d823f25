"""Command-line interface: ``ball``, ``verify`` and ``schema``."""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, get_args

from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from config.config import DEFAULT_PRIME, DEFAULT_RANK, EXPORT_INDENT
from graph_engine import (
    BallExport,
    BallLimitExceeded,
    ConditionReport,
    RadiusTooSmallError,
    generate_ball,
    render_ball,
)

from .models import DEFAULT_CHECKS, CheckName, RunConfig, VerificationReport
from .suites import model_setup, run_suites

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3

console = Console(stderr=True)


class UsageError(ValueError):
    """Raised for invocations that parse but cannot run."""


def _setup_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


def _write(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        output.write_text(text, encoding="utf-8")
        console.print(f"[green]Wrote {output}[/green]")


def _add_model_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--model", choices=["lattice", "building", "synthetic"], default="lattice"
    )
    parser.add_argument("--n", type=int, default=DEFAULT_RANK, help="Rank of the lattice model")
    parser.add_argument("--p", type=int, default=DEFAULT_PRIME, help="Prime of the building")
    parser.add_argument("--radius", type=int, help="Ball radius (default 3)")
    parser.add_argument("--graph", choices=["c5", "c6", "cube"], help="Synthetic graph")
    parser.add_argument("--building-dim", type=int, help="Building dimension (experimental)")
    parser.add_argument(
        "--experimental", action="store_true", help="Allow unsupported building dimensions"
    )
    parser.add_argument("--max-vertices", type=int, help="Vertex ceiling for ball generation")
    parser.add_argument("--output", type=Path, help="Output file (stdout when omitted)")
    parser.add_argument("--quiet", action="store_true", help="No progress bars")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wm-verify",
        description=(
            "Build balls in affine type-A complexes and buildings "
            "and certify weak modularity"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ball = sub.add_parser("ball", help="Generate and export a ball")
    _add_model_options(ball)
    ball.add_argument("--format", choices=["json", "dot", "text"], default="json")

    verify = sub.add_parser("verify", help="Run verification suites on a ball")
    _add_model_options(verify)
    verify.add_argument(
        "--checks",
        help="Comma-separated: triangle, quadrangle, local-wm, height-formula, "
        "edge-forms, square-lemma, apartment-embed, completions",
    )
    verify.add_argument(
        "--all-centers", action="store_true", help="Repeat condition checks around every neighbor"
    )
    verify.add_argument("--fail-fast", action="store_true", help="Keep the first violation only")
    verify.add_argument("--json", action="store_true", help="Print the JSON report to stdout")

    sub.add_parser("schema", help="Print the JSON schemas of all outputs")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    fields: Dict[str, Any] = {
        "model": args.model,
        "n": args.n,
        "p": args.p,
        "graph": args.graph,
        "output": args.output,
        "max_vertices": args.max_vertices,
        "quiet": args.quiet,
        "experimental": args.experimental,
    }
    if args.radius is not None:
        fields["radius"] = args.radius
    if args.building_dim is not None:
        fields["building_dim"] = args.building_dim
    if args.command == "ball":
        fields["format"] = args.format
    else:
        checks: List[str] = (
            [c.strip() for c in args.checks.split(",") if c.strip()]
            if args.checks
            else list(DEFAULT_CHECKS[args.model])
        )
        unknown = sorted(set(checks) - set(get_args(CheckName)))
        if unknown:
            raise UsageError(
                f"Unknown check(s) {unknown}; choose from {', '.join(get_args(CheckName))}"
            )
        fields.update(checks=checks, all_centers=args.all_centers, fail_fast=args.fail_fast)
    return RunConfig(**fields)


def cmd_ball(config: RunConfig) -> int:
    setup = model_setup(config)
    ball = generate_ball(
        setup.oracle,
        setup.base,
        config.radius,
        max_vertices=config.max_vertices,
        quiet=config.quiet,
    )
    _write(render_ball(ball, config.format), config.output)
    console.print(f"{len(ball)} vertices, {len(ball.edges())} edges")
    return EXIT_PASS


def _parameters(config: RunConfig) -> Dict[str, int]:
    if config.model == "lattice":
        return {"n": config.n}
    if config.model == "building":
        return {"p": config.p, "dim": config.building_dim}
    return {}


def _print_summary(report: VerificationReport) -> None:
    table = Table(title=f"{report.model} model, radius {report.radius}")
    table.add_column("Check")
    table.add_column("Instances", justify="right")
    table.add_column("Result")
    table.add_column("First witness")
    for suite in report.suites:
        witness = ""
        if suite.mismatches:
            witness = " ".join(suite.mismatches[0])
        else:
            failing = [r for r in suite.reports if not r.passed]
            if failing:
                witness = " | ".join(failing[0].violations[0])
        result = "[green]pass[/green]" if suite.passed else "[red]FAIL[/red]"
        table.add_row(suite.name, str(suite.instances_checked), result, witness)
    console.print(table)
    if report.experimental:
        console.print("[yellow]Experimental run: carries no acceptance weight[/yellow]")


def cmd_verify(config: RunConfig, print_json: bool = False) -> int:
    ball, results = run_suites(config)
    report = VerificationReport(
        model=config.model,
        parameters=_parameters(config),
        radius=config.radius,
        ball_vertices=len(ball),
        experimental=config.experimental and config.building_dim != 4,
        suites=results,
    )
    _print_summary(report)
    text = report.model_dump_json(indent=EXPORT_INDENT) + "\n"
    if config.output is not None:
        _write(text, config.output)
    elif print_json:
        _write(text, None)
    return EXIT_PASS if report.passed else EXIT_VIOLATION


def cmd_schema() -> int:
    schemas = {
        model.__name__: model.model_json_schema()
        for model in (RunConfig, BallExport, ConditionReport, VerificationReport)
    }
    _write(json.dumps(schemas, indent=EXPORT_INDENT, sort_keys=True) + "\n", None)
    return EXIT_PASS


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "schema":
        return cmd_schema()

    _setup_logging(args.verbose)
    try:
        config = _config_from_args(args)
        if args.command == "ball":
            return cmd_ball(config)
        return cmd_verify(config, print_json=args.json)
    except (ValidationError, UsageError, RadiusTooSmallError) as e:
        console.print(f"[red]Usage error:[/red] {e}")
        return EXIT_USAGE
    except BallLimitExceeded as e:
        console.print(f"[red]Aborted:[/red] {e}")
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
