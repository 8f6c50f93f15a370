import click
import logging
import typing
from pathlib import Path
from pydantic import ValidationError
from constrained_lcs.core import CapacityError, OracleSizeError, plain_lcs_length
from constrained_lcs.models import Instance, Outcome, SolveReport, SolverConfig
from constrained_lcs.solvers import solve as run_solver
from constrained_lcs.cli.commands.shared import (
    load_instance,
    output_format_option,
    sequence_options,
)
from constrained_lcs.utils import EXIT_INFEASIBLE, EXIT_OK

log = logging.getLogger(__name__)


@click.command()
@sequence_options
@click.option(
    "--algo",
    "algorithm",
    help="Solver to use. Defaults to CLCS_ALGORITHM or cubic",
    type=click.Choice(["quartic", "cubic", "oracle"]),
    default=None,
)
@click.option(
    "--memory-budget",
    "memory_budget",
    help="Largest table size in bytes. Defaults to CLCS_MEMORY_BUDGET or 512 MiB",
    type=click.types.INT,
    default=None,
)
@click.option(
    "--stats", "show_stats", help="Include solver statistics", is_flag=True, default=False
)
@output_format_option
@click.pass_context
def solve(
    ctx: click.Context,
    x: typing.Optional[str],
    x_file: typing.Optional[Path],
    y: typing.Optional[str],
    y_file: typing.Optional[Path],
    include: typing.Optional[str],
    include_file: typing.Optional[Path],
    exclude: typing.Optional[str],
    exclude_file: typing.Optional[Path],
    algorithm: typing.Optional[str],
    memory_budget: typing.Optional[int],
    show_stats: bool,
    output_format: str,
):
    """
    Longest common subsequence of X and Y that includes P as a substring and excludes Q as a subsequence.

    Exits 0 when a solution exists, 2 when the instance is infeasible and 1 on usage errors.
    """
    instance = load_instance(
        x, x_file, y, y_file, include, include_file, exclude, exclude_file
    )
    overrides: typing.Dict[str, typing.Any] = {"collect_stats": show_stats}
    if algorithm is not None:
        overrides["algorithm"] = algorithm
    if memory_budget is not None:
        overrides["memory_budget"] = memory_budget
    try:
        config = SolverConfig(**overrides)
    except ValidationError as exc:
        raise click.UsageError(str(exc))

    log.debug(f"Solving {instance} with {config}")
    try:
        outcome = run_solver(instance, config)
    except (CapacityError, OracleSizeError) as exc:
        raise click.ClickException(str(exc))

    if output_format == "json":
        report = SolveReport.from_outcome(instance, outcome, with_stats=show_stats)
        click.echo(report.json())
    else:
        click.echo(format_outcome(instance, outcome, show_stats))
    ctx.exit(EXIT_OK if outcome.feasible else EXIT_INFEASIBLE)


def format_outcome(instance: Instance, outcome: Outcome, show_stats: bool) -> str:
    if outcome.feasible:
        lines = [f"length: {outcome.length}", f"lcs: {outcome.witness}"]
    else:
        lines = ["infeasible: no common subsequence includes P and excludes Q"]
    lines.append(f"algorithm: {outcome.algorithm}")
    if show_stats and outcome.stats is not None:
        stats = outcome.stats
        lines += [
            f"plain lcs length: {plain_lcs_length(instance.x, instance.y)}",
            f"cell updates: {stats.cell_updates} {stats.table_updates}",
            f"combine candidates: {stats.combine_candidates}",
            f"wall time: {stats.wall_time.total_seconds():.6f}s",
        ]
    return "\n".join(lines)
