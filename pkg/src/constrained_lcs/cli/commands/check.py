import click
import json
import logging
import typing
from pathlib import Path
from pydantic import ValidationError
from constrained_lcs.core import validate
from constrained_lcs.models import SolveReport
from constrained_lcs.cli.commands.shared import (
    load_instance,
    output_format_option,
    sequence_options,
)
from constrained_lcs.utils import EXIT_INFEASIBLE, EXIT_OK, resolve_sequence

log = logging.getLogger(__name__)


@click.command()
@sequence_options
@click.option(
    "--candidate", "candidate", help="Candidate solution to check", default=None
)
@click.option(
    "--candidate-file",
    "candidate_file",
    help="Candidate solution, read from a plain text or FASTA file",
    default=None,
    type=click.types.Path(
        file_okay=True, dir_okay=False, exists=True, readable=True, path_type=Path
    ),
)
@click.option(
    "--report",
    "report_path",
    help="JSON report written by `solve --format json`; checks its lcs against its own inputs",
    default=None,
    type=click.types.Path(
        file_okay=True, dir_okay=False, exists=True, readable=True, path_type=Path
    ),
)
@output_format_option
@click.pass_context
def check(
    ctx: click.Context,
    x: typing.Optional[str],
    x_file: typing.Optional[Path],
    y: typing.Optional[str],
    y_file: typing.Optional[Path],
    include: typing.Optional[str],
    include_file: typing.Optional[Path],
    exclude: typing.Optional[str],
    exclude_file: typing.Optional[Path],
    candidate: typing.Optional[str],
    candidate_file: typing.Optional[Path],
    report_path: typing.Optional[Path],
    output_format: str,
):
    """
    Checks a candidate: common subsequence of X and Y, P included as a substring, Q excluded as a subsequence.

    Exits 0 when the candidate is valid and 2 when it is not.
    """
    if report_path is not None:
        try:
            report = SolveReport.parse_file(report_path)
            instance = report.to_instance()
        except (ValidationError, ValueError) as exc:
            raise click.UsageError(f"Could not read report {report_path.name}: {exc}")
        if report.lcs is None:
            raise click.UsageError(f"Report {report_path.name} holds no solution")
        candidate_seq = report.lcs
    else:
        instance = load_instance(
            x, x_file, y, y_file, include, include_file, exclude, exclude_file
        )
        candidate_seq = resolve_sequence("candidate", candidate, candidate_file)
        if candidate_seq is None:
            raise click.UsageError("A candidate is required (--candidate/--candidate-file)")

    result = validate(instance, candidate_seq)
    if output_format == "json":
        click.echo(json.dumps({**result.dict(), "valid": result.valid}))
    else:
        click.echo(
            "\n".join(
                [
                    f"candidate: {candidate_seq}",
                    f"length: {result.length}",
                    f"common subsequence: {'yes' if result.is_common_subsequence else 'no'}",
                    f"includes P as substring: {'yes' if result.includes_p_substring else 'no'}",
                    f"excludes Q as subsequence: {'yes' if result.excludes_q_subsequence else 'no'}",
                    f"valid: {'yes' if result.valid else 'no'}",
                ]
            )
        )
    ctx.exit(EXIT_OK if result.valid else EXIT_INFEASIBLE)
