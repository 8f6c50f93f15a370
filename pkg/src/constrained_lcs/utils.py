from __future__ import annotations
import logging
import multiprocessing
import typing
from pathlib import Path
import click

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_MISMATCH = 3

_T = typing.TypeVar("_T")
_R = typing.TypeVar("_R")


def read_sequence_file(path: Path) -> str:
    """
    Reads one sequence from a plain text or FASTA-style file.

    Lines starting with '>' are headers and skipped, the remaining lines are stripped and
    concatenated. Only single-record files are supported.
    """
    lines = path.read_text(encoding="latin-1").splitlines()
    sequence = "".join(line.strip() for line in lines if not line.startswith(">"))
    log.debug(f"Read {len(sequence)} symbols from {path.name}")
    return sequence


def check_printable(name: str, sequence: str) -> str:
    for symbol in sequence:
        if not 0x20 <= ord(symbol) <= 0x7E:
            raise click.UsageError(
                f"{name} contains {symbol!r}, only printable ASCII is accepted"
            )
    return sequence


def resolve_sequence(
    name: str, inline: typing.Optional[str], path: typing.Optional[Path]
) -> typing.Optional[str]:
    """Returns the inline value or the file content; None if neither was given"""
    if inline is not None and path is not None:
        raise click.UsageError(f"Give either --{name} or --{name}-file, not both")
    if path is not None:
        return check_printable(f"--{name}-file", read_sequence_file(path))
    if inline is not None:
        return check_printable(f"--{name}", inline)
    return None


def imap_ordered(
    worker: typing.Callable[[_T], _R], jobs: typing.List[_T], nproc: int
) -> typing.Iterator[_R]:
    """
    Yields worker(job) for every job in job order, spread over nproc processes.

    nproc <= 1 runs inline in the calling process.
    """
    if nproc <= 1 or len(jobs) <= 1:
        for job in jobs:
            yield worker(job)
        return
    pool = multiprocessing.Pool(processes=nproc)
    try:
        log.info(f"Processing {len(jobs)} jobs with {nproc} processes")
        yield from pool.imap(worker, jobs)
    except KeyboardInterrupt:
        # partial results must not look like a complete run
        log.warning("Aborting processing")
        raise
    finally:
        pool.close()
        pool.terminate()
        pool.join()


def get_nproc(ctx: click.Context) -> int:
    return (
        ctx.parent.params.get("nproc", multiprocessing.cpu_count())
        if ctx.parent
        else multiprocessing.cpu_count()
    )
