import click
import logging
import multiprocessing
import sys
from constrained_lcs.utils import EXIT_USAGE

logging.basicConfig(level=logging.WARNING)
log = logging.getLogger(__name__)

from constrained_lcs.cli.commands.solve import solve
from constrained_lcs.cli.commands.check import check
from constrained_lcs.cli.commands.fuzz import fuzz
from constrained_lcs.cli.commands.bench import bench
from constrained_lcs.cli.commands.schema import schema

_commands = [solve, check, fuzz, bench, schema]

_DEFAULT_NPROC = multiprocessing.cpu_count()


class ExitCodeGroup(click.Group):
    """
    click exits 2 on usage errors, here 2 means "infeasible", so usage errors exit 1 instead.
    """

    def main(self, *args, **kwargs):
        kwargs.pop("standalone_mode", None)
        try:
            status = super().main(*args, standalone_mode=False, **kwargs)
        except click.UsageError as exc:
            exc.show()
            sys.exit(EXIT_USAGE)
        except click.ClickException as exc:
            exc.show()
            sys.exit(exc.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)
        sys.exit(status if isinstance(status, int) else 0)


# Add each sub-command here :)
@click.group(cls=ExitCodeGroup, commands=_commands)
@click.option("--debug", is_flag=True)
@click.option(
    "--nproc",
    default=_DEFAULT_NPROC,
    help="Number of processes to use for fuzz and bench (1 runs inline)",
)
@click.pass_context
def cli(ctx, debug: bool, nproc: int):
    """
    Constrained longest common subsequence: include P as a substring, exclude Q as a subsequence.
    Check the help for each sub-command for details.
    """
    if debug:
        logging.root.setLevel(logging.DEBUG)
    elif ctx.invoked_subcommand in ("fuzz", "bench"):
        logging.root.setLevel(logging.INFO)
    else:
        logging.root.setLevel(logging.WARNING)
    logging.root.handlers[0].setFormatter(
        logging.Formatter(
            fmt="%(asctime)s %(levelname)-8s %(name)-24s %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )
    )


if __name__ == "__main__":
    cli()
