"""
Command Line Interface for pcurv.

Every subcommand builds a CommandRequest, hands it to the dispatcher and
renders the resulting report. Exit codes: 0 success, 2 input errors,
3 math-domain errors, 1 anything else.
"""

import sys
import uuid
from pathlib import Path
from typing import Any, Dict, Optional

import click
from rich.console import Console
from rich.panel import Panel
from rich.syntax import Syntax
from rich.table import Table

from ...application.dispatcher import CommandDispatcher
from ...application.dtos import CommandReport, CommandRequest
from ...application.serializers import render_json, write_report
from ...infrastructure.config import ExecutorKind, get_settings, reload_settings
from ...infrastructure.logging import correlation_id, init_logger


console = Console()

json_option = click.option(
    "--json", "json_path", type=click.Path(dir_okay=False), help="Write the structured report to PATH"
)
prime_option = click.option("--prime", "-p", type=int, help="Characteristic p")


@click.group()
@click.option("--debug", is_flag=True, help="Enable debug logging")
@click.option("--config", type=click.Path(exists=True, dir_okay=False), help="Env file with settings")
@click.pass_context
def cli(ctx: click.Context, debug: bool, config: Optional[str]) -> None:
    """pcurv - p-curvature and arithmetic tests for linear differential operators."""
    settings = reload_settings(Path(config)) if config else get_settings()
    if debug:
        settings.debug = True
    init_logger()
    token = correlation_id.set(uuid.uuid4().hex[:12])
    ctx.call_on_close(lambda: correlation_id.reset(token))
    ctx.obj = {"settings": settings}


def _dispatcher(ctx: click.Context) -> CommandDispatcher:
    obj = ctx.ensure_object(dict)
    if "dispatcher" not in obj:
        obj["dispatcher"] = CommandDispatcher(obj.get("settings"))
    return obj["dispatcher"]


def _run(command: str, arguments: Dict[str, Any], json_path: Optional[str]) -> CommandReport:
    """Dispatch one command, render it and exit with the report's code on failure."""
    ctx = click.get_current_context()
    dispatcher = _dispatcher(ctx)
    include_timing = dispatcher.settings.output.include_timing
    request = CommandRequest(command, {k: v for k, v in arguments.items() if v is not None})
    report = dispatcher.dispatch(request)

    if json_path:
        write_report(report, Path(json_path), include_timing)

    if not report.ok:
        console.print(f"[bold red]Error:[/bold red] {report.error.message}")
        sys.exit(report.exit_code)

    console.print(f"[bold green]{command}:[/bold green] {report.summary}")
    if command != "catalog":
        syntax = Syntax(render_json(report, include_timing), "json", theme="monokai", word_wrap=True)
        console.print(Panel(syntax, title=command, border_style="blue"))
    if json_path:
        console.print(f"[green]Report saved to: {json_path}[/green]")
    return report


@cli.command()
@click.option("--num", required=True, help="Dividend operator")
@click.option("--den", required=True, help="Divisor operator")
@prime_option
@json_option
def divide(num: str, den: str, prime: Optional[int], json_path: Optional[str]) -> None:
    """Right Euclidean division num = q*den + r."""
    _run("divide", {"num": num, "den": den, "prime": prime}, json_path)


@cli.command()
@click.option("--op", required=True, help="Operator text or @catalog-name")
@prime_option
@click.option(
    "--method",
    type=click.Choice(["recurrence", "remainders", "crt", "closed-form"]),
    help="Algorithm (default from settings)",
)
@click.option("--points", help="Comma separated CRT evaluation points")
@json_option
def pcurvature(
    op: str, prime: Optional[int], method: Optional[str], points: Optional[str], json_path: Optional[str]
) -> None:
    """p-curvature matrix of an operator."""
    _run("pcurvature", {"op": op, "prime": prime, "method": method, "points": points}, json_path)


@cli.command()
@click.option("--op", required=True, help="Operator text or @catalog-name")
@prime_option
@json_option
def cartier(op: str, prime: Optional[int], json_path: Optional[str]) -> None:
    """Compare zero p-curvature with divisibility of Dx^p by the operator."""
    _run("cartier", {"op": op, "prime": prime}, json_path)


@cli.command()
@click.option("--op", required=True, help="Operator text or @catalog-name")
@click.option("--pmin", type=int, help="Smallest prime (inclusive)")
@click.option("--pmax", type=int, help="Largest prime (inclusive)")
@click.option("--workers", type=int, help="Worker pool size")
@click.option("--executor", type=click.Choice([k.value for k in ExecutorKind]), help="Worker pool kind")
@json_option
def scan(
    op: str,
    pmin: Optional[int],
    pmax: Optional[int],
    workers: Optional[int],
    executor: Optional[str],
    json_path: Optional[str],
) -> None:
    """p-curvature over a range of primes."""
    report = _run(
        "scan",
        {"op": op, "pmin": pmin, "pmax": pmax, "workers": workers, "executor": executor},
        json_path,
    )
    result = report.result
    table = Table(title="Exceptional primes")
    table.add_column("Kind", style="cyan")
    table.add_column("Primes", style="white")
    table.add_row("nonzero p-curvature", ", ".join(map(str, result.exception_primes)) or "-")
    table.add_row("bad reduction", ", ".join(map(str, result.bad_reduction_primes)) or "-")
    console.print(table)


@cli.command()
@click.option("--a", "a", required=True, help="Rational function a(x) of Dx - a")
@click.option("--pmin", type=int, help="Smallest prime (inclusive)")
@click.option("--pmax", type=int, help="Largest prime (inclusive)")
@json_option
def order1(a: str, pmin: Optional[int], pmax: Optional[int], json_path: Optional[str]) -> None:
    """Algebraicity of solutions of a first-order operator."""
    _run("order1", {"a": a, "pmin": pmin, "pmax": pmax}, json_path)


@cli.command()
@click.option("--upper", required=True, help="Comma separated upper parameters")
@click.option("--lower", default="", help="Comma separated lower parameters, without the implicit 1")
@json_option
def hypergeom(upper: str, lower: str, json_path: Optional[str]) -> None:
    """Interlacing classification of a hypergeometric function."""
    _run("hypergeom", {"upper": upper, "lower": lower}, json_path)


@cli.command()
@click.option("--coefficients", help="Comma separated series coefficients")
@click.option("--op", help="Operator generating the coefficients")
@click.option("--initial", help="Initial coefficients for --op")
@click.option("--terms", type=int, help="Number of coefficients")
@click.option("--bound", type=int, help="Largest prime tried for the denominators")
@json_option
def eisenstein(
    coefficients: Optional[str],
    op: Optional[str],
    initial: Optional[str],
    terms: Optional[int],
    bound: Optional[int],
    json_path: Optional[str],
) -> None:
    """Eisenstein denominator test on a coefficient prefix."""
    _run(
        "eisenstein",
        {"coefficients": coefficients, "op": op, "initial": initial, "terms": terms, "bound": bound},
        json_path,
    )


@cli.command()
@click.option("--op", required=True, help="Operator text or @catalog-name")
@click.option("--initial", required=True, help="Comma separated initial coefficients")
@prime_option
@click.option("--terms", type=int, help="Number of coefficients")
@json_option
def integrality(
    op: str, initial: str, prime: Optional[int], terms: Optional[int], json_path: Optional[str]
) -> None:
    """p-integrality of a power series solution."""
    _run("integrality", {"op": op, "initial": initial, "prime": prime, "terms": terms}, json_path)


@cli.command()
@click.option("--op", required=True, help="Operator text or @catalog-name")
@click.option("--slack", type=int, help="Extra series order beyond the exponent spread")
@json_option
def locallogs(op: str, slack: Optional[int], json_path: Optional[str]) -> None:
    """Logarithmic solutions at regular singular points."""
    _run("locallogs", {"op": op, "slack": slack}, json_path)


@cli.command()
@click.option("--op", required=True, help="Operator text or @catalog-name")
@click.option(
    "--initial",
    required=True,
    help="Initial values y(0), y'(0), ...; first coefficients with --recurrence or at a singular 0",
)
@click.option("--terms", type=int, help="Number of coefficients")
@click.option("--recurrence", is_flag=True, help="Unroll and report the coefficient recurrence")
@prime_option
@click.option("--rescale", help="Base b of the rescaled coefficients a_n * b^n")
@click.option("--params", help="Comma separated extra parameters of the rescaling")
@json_option
def series(
    op: str,
    initial: str,
    terms: Optional[int],
    recurrence: bool,
    prime: Optional[int],
    rescale: Optional[str],
    params: Optional[str],
    json_path: Optional[str],
) -> None:
    """Power series solution of an operator."""
    _run(
        "series",
        {
            "op": op,
            "initial": initial,
            "terms": terms,
            "recurrence": recurrence or None,
            "prime": prime,
            "rescale": rescale,
            "params": params,
        },
        json_path,
    )


@cli.command()
@click.option("--rational", required=True, help="Rational function in x, y[, z]")
@click.option("--terms", type=int, help="Number of coefficients")
@json_option
def diagonal(rational: str, terms: Optional[int], json_path: Optional[str]) -> None:
    """Diagonal coefficients of a multivariate rational function."""
    _run("diagonal", {"rational": rational, "terms": terms}, json_path)


@cli.command()
@click.option("--poly", required=True, help="Polynomial in x")
@click.option("--pmin", type=int, help="Smallest prime (inclusive)")
@click.option("--pmax", type=int, help="Largest prime (inclusive)")
@json_option
def kronecker(poly: str, pmin: Optional[int], pmax: Optional[int], json_path: Optional[str]) -> None:
    """Primes modulo which a polynomial splits."""
    _run("kronecker", {"poly": poly, "pmin": pmin, "pmax": pmax}, json_path)


@cli.command()
@click.option("--poly", required=True, help="Polynomial P(x, y)")
@click.option("--coefficients", help="Comma separated series coefficients")
@click.option("--op", help="Operator generating the coefficients")
@click.option("--initial", help="Initial coefficients for --op")
@click.option("--terms", type=int, help="Number of coefficients checked")
@prime_option
@json_option
def relation(
    poly: str,
    coefficients: Optional[str],
    op: Optional[str],
    initial: Optional[str],
    terms: Optional[int],
    prime: Optional[int],
    json_path: Optional[str],
) -> None:
    """Check P(x, f(x)) = 0 to a truncation order."""
    _run(
        "relation",
        {
            "poly": poly,
            "coefficients": coefficients,
            "op": op,
            "initial": initial,
            "terms": terms,
            "prime": prime,
        },
        json_path,
    )


@cli.command()
@click.option("--poly", required=True, help="Polynomial P(x, y) over F_p")
@prime_option
@click.option("--y0", type=int, help="Constant term of the root")
@click.option("--terms", type=int, help="Number of coefficients")
@json_option
def algebraic(
    poly: str, prime: Optional[int], y0: Optional[int], terms: Optional[int], json_path: Optional[str]
) -> None:
    """Power series root of P(x, y) = 0 over F_p by Newton lifting."""
    _run("algebraic", {"poly": poly, "prime": prime, "y0": y0, "terms": terms}, json_path)


@cli.command()
@click.option("--op", required=True, help="Operator text or @catalog-name")
@prime_option
@click.option("--point", type=int, help="Expansion point a in F_p")
@json_option
def fundamental(op: str, prime: Optional[int], point: Optional[int], json_path: Optional[str]) -> None:
    """Fundamental matrix of solutions in F_p[[x - a]] modulo (x - a)^p."""
    _run("fundamental", {"op": op, "prime": prime, "point": point}, json_path)


@cli.command()
@click.option("--tag", help="Only operators with this tag")
@json_option
def catalog(tag: Optional[str], json_path: Optional[str]) -> None:
    """List the operator catalog."""
    report = _run("catalog", {"tag": tag}, json_path)

    table = Table(title=f"Operator catalog ({len(report.result)} operators)")
    table.add_column("Name", style="cyan", no_wrap=True)
    table.add_column("Operator", style="white", max_width=50)
    table.add_column("Tags", style="green")
    table.add_column("Description", style="dim", max_width=40)
    for entry in report.result:
        text = str(entry.operator)
        table.add_row(
            f"@{entry.name}",
            text[:50] + "..." if len(text) > 50 else text,
            ", ".join(entry.tags),
            entry.description or "",
        )
    console.print(table)


@cli.command()
@json_option
def config(json_path: Optional[str]) -> None:
    """Show current configuration."""
    _run("config", {}, json_path)


if __name__ == "__main__":
    cli()
