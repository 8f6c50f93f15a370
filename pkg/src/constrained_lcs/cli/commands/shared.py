# Options and input handling shared by the solve and check commands
import typing
from pathlib import Path
import click
from pydantic import ValidationError
from constrained_lcs.models import Instance
from constrained_lcs.utils import resolve_sequence

_FILE_TYPE = click.types.Path(
    file_okay=True,
    dir_okay=False,
    exists=True,
    readable=True,
    path_type=Path,
    resolve_path=True,
)

_SEQUENCES = [
    ("x", "First input sequence X"),
    ("y", "Second input sequence Y"),
    ("include", "Constraint P that must appear in the result as a substring"),
    ("exclude", "Constraint Q that must not appear in the result as a subsequence"),
]


def sequence_options(command: typing.Callable) -> typing.Callable:
    """Adds --NAME / --NAME-file pairs for X, Y, P and Q"""
    for name, description in reversed(_SEQUENCES):
        command = click.option(
            f"--{name}-file",
            f"{name}_file",
            help=f"{description}, read from a plain text or FASTA file",
            required=False,
            default=None,
            type=_FILE_TYPE,
        )(command)
        command = click.option(
            f"--{name}",
            name,
            help=description,
            required=False,
            default=None,
            type=click.types.STRING,
        )(command)
    return command


def output_format_option(command: typing.Callable) -> typing.Callable:
    return click.option(
        "--format",
        "output_format",
        help="Report format",
        type=click.Choice(["text", "json"]),
        default="text",
        show_default=True,
    )(command)


def load_instance(
    x: typing.Optional[str],
    x_file: typing.Optional[Path],
    y: typing.Optional[str],
    y_file: typing.Optional[Path],
    include: typing.Optional[str],
    include_file: typing.Optional[Path],
    exclude: typing.Optional[str],
    exclude_file: typing.Optional[Path],
) -> Instance:
    """Builds the Instance from inline values or files, usage errors for anything invalid"""
    x_seq = resolve_sequence("x", x, x_file)
    y_seq = resolve_sequence("y", y, y_file)
    if x_seq is None or y_seq is None:
        raise click.UsageError("Both X and Y are required (--x/--x-file, --y/--y-file)")
    p_seq = resolve_sequence("include", include, include_file)
    q_seq = resolve_sequence("exclude", exclude, exclude_file)
    try:
        return Instance(x=x_seq, y=y_seq, p=p_seq or "", q=q_seq or "")
    except ValidationError as exc:
        messages = "; ".join(error["msg"] for error in exc.errors())
        raise click.UsageError(messages)
