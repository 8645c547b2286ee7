#!/usr/bin/env python3
import sys
from typing import List, Optional

import typer

try:  # newer typer vendors its own click
    from typer._click import exceptions as click_exceptions
except ImportError:
    from click import exceptions as click_exceptions
from rich import print

from wavekit.cli.commands.dispersion.main import dispersion
from wavekit.cli.commands.evolve.main import evolve
from wavekit.cli.commands.linear.main import linear_sweep
from wavekit.cli.commands.residual.main import global_residual
from wavekit.cli.commands.soliton.main import boussinesq, manifold, soliton_atlas, soliton_profile
from wavekit.cli.utils import EXIT_OK, EXIT_USAGE
from wavekit.lab.registry import get_global_registry

app = typer.Typer(help="wavekit: 常涡度水波非局部全局关系的数值实验", no_args_is_help=True)

app.command("dispersion")(dispersion)
app.command("global-residual")(global_residual)
app.command("linear-sweep")(linear_sweep)
app.command("evolve")(evolve)
app.command("boussinesq")(boussinesq)
app.command("soliton-profile")(soliton_profile)
app.command("soliton-atlas")(soliton_atlas)
app.command("manifold")(manifold)


def usage():
    print("[bold]Usage:[/bold] wavekit COMMAND [OPTIONS]\n")
    registry = get_global_registry()
    for command in registry.list_experiments():
        info = registry.get_experiment_info(command)
        print(f"  [cyan]{command:<16}[/cyan] {info['description']}")


def run(argv: Optional[List[str]] = None) -> int:
    """
    Dispatch one subcommand and return its exit code.

    0 success, 1 validation error, 2 numerical failure, 64 usage error.
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv:
        usage()
        return EXIT_USAGE
    try:
        rv = app(args=argv, prog_name="wavekit", standalone_mode=False)
    except click_exceptions.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click_exceptions.Exit as e:
        return e.exit_code
    return rv if isinstance(rv, int) else EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
