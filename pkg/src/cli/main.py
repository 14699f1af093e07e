#!/usr/bin/env python3
"""
yamabe-lab CLI - Main entry point.

Batch front-end for soliton verification, family construction and geodesic probing.
"""

import sys
from typing import Callable, Optional

import click
from dotenv import load_dotenv
from pydantic import ValidationError

from ..families import FamilyError, describe_catalog
from ..families.exceptions import CatalogVerificationError
from ..geodesics import GeodesicInputError
from ..quadrature import (
    OutOfDomainError,
    QuadratureInputError,
    RelationDomainError,
)
from ..reductions import ReductionInputError
from ..reporter import Reporter, to_json_text
from ..tensor import DimensionMismatchError, SamplingError
from ..utils.logger import get_logger, setup_logging
from .exceptions import ProblemSpecError
from .orchestrator import Orchestrator, OrchestratorConfig

# Load environment variables from .env file
load_dotenv()

logger = get_logger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_INTERRUPTED = 130

INPUT_ERRORS = (
    ProblemSpecError,
    ValidationError,
    ValueError,
    GeodesicInputError,
    QuadratureInputError,
    OutOfDomainError,
    RelationDomainError,
    ReductionInputError,
    DimensionMismatchError,
    SamplingError,
)


def exit_code_for(error: Exception) -> int:
    """
    Map an exception to the CLI exit code.

    Parameter-domain violations of the families are input errors; a failed
    build-time verification is a quantitative failure.
    """
    if isinstance(error, CatalogVerificationError):
        return EXIT_FAIL
    if isinstance(error, INPUT_ERRORS) or isinstance(error, FamilyError):
        return EXIT_INPUT
    return EXIT_FAIL


def spec_option(func: Callable) -> Callable:
    options = [
        click.option(
            "--spec",
            "spec_path",
            required=True,
            type=click.Path(dir_okay=False),
            help="JSON problem spec",
        ),
        click.option(
            "--out", "-o", "output_dir", type=click.Path(), help="Output directory for files"
        ),
        click.option(
            "--tol",
            type=click.FloatRange(min=0, min_open=True),
            help="Residual tolerance (default: 1e-8)",
        ),
        click.option("--seed", type=int, help="Sampling seed (default: spec seed, else 0)"),
        click.option(
            "--points",
            type=click.IntRange(min=1),
            help="Sample points (default: 64; probe: initial conditions, default 20)",
        ),
        click.option(
            "--threads",
            envvar="YAMABE_LAB_THREADS",
            type=click.IntRange(min=1),
            help="Worker cap for batch work (or set YAMABE_LAB_THREADS)",
        ),
        click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def run_command(
    command: str,
    spec_path: str,
    output_dir: Optional[str],
    tol: Optional[float],
    seed: Optional[int],
    points: Optional[int],
    threads: Optional[int],
    verbose: bool,
) -> None:
    """Run one spec-driven command and exit with its code."""
    setup_logging(verbose=verbose)
    config = OrchestratorConfig(
        command=command,
        spec_path=spec_path,
        output_dir=output_dir,
        tolerance=tol,
        seed=seed,
        points=points,
        threads=threads,
        verbose=verbose,
    )

    try:
        orchestrator = Orchestrator(config)
        result = orchestrator.run()
    except KeyboardInterrupt:
        click.echo("\n\nInterrupted by user.", err=True)
        sys.exit(EXIT_INTERRUPTED)
    except Exception as e:
        code = exit_code_for(e)
        click.echo(f"\nError: {str(e)}", err=True)
        if code == EXIT_INPUT:
            logger.debug(f"Input error: {e}", exc_info=True)
        else:
            logger.error(f"Processing failed: {e}", exc_info=True)
        sys.exit(code)

    click.echo(to_json_text(result.report), nl=False)
    orchestrator.reporter.print_lines(result.lines)
    for path in result.files:
        click.echo(f"  saved {path}", err=True)
    sys.exit(EXIT_PASS if result.passed else EXIT_FAIL)


@click.group()
@click.version_option(version="0.1.0", prog_name="yamabe-lab")
def cli():
    """
    yamabe-lab - gradient k-Yamabe solitons conformal to pseudo-Euclidean space.

    Verify candidate solitons, build solution families, and integrate geodesics
    of conformal metrics g = delta / phi^2.
    """
    pass


@cli.command()
@spec_option
def verify(**options):
    """
    Soliton residual at sample points plus reduced residuals.

    Example:
        yamabe-lab verify --spec specs/ex26.json
    """
    run_command("verify", **options)


@cli.command()
@spec_option
def curvature(**options):
    """Ricci, scalar, Schouten endomorphism and sigma_k at sample points."""
    run_command("curvature", **options)


@cli.command()
@spec_option
def reduce(**options):
    """Reduced ODE residuals and sigma_k on a grid of the invariant."""
    run_command("reduce", **options)


@cli.command()
@spec_option
def family(**options):
    """Build a family member; write its profile table and certificate."""
    run_command("family", **options)


@cli.command("solve-implicit")
@spec_option
def solve_implicit(**options):
    """Invert an implicit translation relation on a xi grid."""
    run_command("solve-implicit", **options)


@cli.command()
@spec_option
def geodesic(**options):
    """Integrate one geodesic; write the trajectory table."""
    run_command("geodesic", **options)


@cli.command()
@spec_option
def probe(**options):
    """Forward/backward completeness probe over a set of initial conditions."""
    run_command("probe", **options)


@cli.command("catalog-list")
def catalog_list():
    """List catalog ids with their default parameters."""
    entries = describe_catalog()
    Reporter().print_catalog(entries)
    click.echo(to_json_text(entries), nl=False)


def main():
    """Entry point for CLI."""
    cli()


if __name__ == "__main__":
    main()
