"""
Main entry point for pcurv.

Besides the ``pcurv`` console script, this script offers:
- ``cli``: the full command line interface
- ``version``: package and backend versions
- ``health``: import, configuration and catalog checks
"""

import sys

import click

from src.infrastructure.config import get_settings
from src.infrastructure.logging import init_logger


@click.group()
def main():
    """pcurv - exact p-curvature computations."""
    pass


@main.command(context_settings={"ignore_unknown_options": True, "allow_extra_args": True})
@click.pass_context
def cli(ctx):
    """Start the CLI interface."""
    from src.presentation.cli.main import cli as cli_app

    init_logger()
    cli_app.main(args=ctx.args, prog_name="pcurv", standalone_mode=True)


@main.command()
def version():
    """Show version information."""
    settings = get_settings()

    click.echo(f"pcurv v{settings.app_version}")
    click.echo(f"Environment: {settings.environment.value}")

    try:
        import flint
        click.echo(f"python-flint: {flint.__version__}")
    except ImportError:
        click.echo("python-flint: Not installed")

    try:
        import pydantic
        click.echo(f"Pydantic: {pydantic.__version__}")
    except ImportError:
        click.echo("Pydantic: Not installed")


@main.command()
def health():
    """Check application health."""
    click.echo("Checking application health...")
    try:
        import flint  # noqa: F401

        from src.adapters.catalog_loaders import YamlOperatorCatalog
        from src.adapters.parsers import parse_operator
    except ImportError as e:
        click.echo(f"✗ Import failed: {e}")
        sys.exit(1)
    click.echo("✓ Core modules imported successfully")

    settings = get_settings()
    click.echo(f"✓ Configuration loaded (env: {settings.environment.value})")

    if settings.catalog.enabled:
        try:
            catalog = YamlOperatorCatalog(settings.catalog.catalog_dir)
            entries = catalog.list_entries()
            for entry in entries:
                parse_operator(entry.operator)
            click.echo(f"✓ Catalog loaded ({len(entries)} operators)")
        except Exception as e:
            click.echo(f"✗ Catalog loading failed: {e}")
            sys.exit(1)

    click.echo("✓ All health checks passed")


if __name__ == "__main__":
    main()
