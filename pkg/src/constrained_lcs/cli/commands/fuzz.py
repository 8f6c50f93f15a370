import click
import json
import logging
import typing
from pydantic import ValidationError
from constrained_lcs import solvers
from constrained_lcs.core import validate
from constrained_lcs.models import GenParams, Outcome
from constrained_lcs.oracle import brute_force_solve, gen_instance
from constrained_lcs.cli.commands.shared import output_format_option
from constrained_lcs.utils import EXIT_MISMATCH, EXIT_OK, get_nproc, imap_ordered

log = logging.getLogger(__name__)


@click.command()
@click.option("--seed", help="64-bit generator seed", type=click.types.INT, default=0)
@click.option(
    "--iters", help="Number of instances to check", type=click.types.INT, default=100
)
@click.option("--max-n", "max_n", type=click.types.INT, default=10, show_default=True)
@click.option(
    "--max-m", "max_m", help="Defaults to --max-n", type=click.types.INT, default=None
)
@click.option("--max-s", "max_s", type=click.types.INT, default=3, show_default=True)
@click.option("--max-t", "max_t", type=click.types.INT, default=3, show_default=True)
@click.option(
    "--alphabet-size",
    "alphabet_size",
    help="Largest alphabet, each instance draws its size from 2..N",
    type=click.types.INT,
    default=4,
    show_default=True,
)
@click.option(
    "--plant-probability",
    "plant_probability",
    help="Chance of embedding P into X and Y",
    type=click.types.FLOAT,
    default=0.5,
    show_default=True,
)
@click.option(
    "--keep-going",
    "keep_going",
    help="Collect every mismatch instead of stopping at the first",
    is_flag=True,
    default=False,
)
@output_format_option
@click.pass_context
def fuzz(
    ctx: click.Context,
    seed: int,
    iters: int,
    max_n: int,
    max_m: typing.Optional[int],
    max_s: int,
    max_t: int,
    alphabet_size: int,
    plant_probability: float,
    keep_going: bool,
    output_format: str,
):
    """
    Differential check of both solvers against the exhaustive oracle on seeded random instances.

    Every failure prints a reproducer (seed, index and the instance). Exits 3 on any mismatch.
    """
    if iters < 0:
        raise click.UsageError("--iters must not be negative")
    try:
        params = GenParams(
            seed=seed,
            n_max=max_n,
            m_max=max_m if max_m is not None else max_n,
            s_max=max_s,
            t_max=max_t,
            alphabet_size=alphabet_size,
            plant_probability=plant_probability,
        )
    except ValidationError as exc:
        raise click.UsageError(str(exc))

    nproc = get_nproc(ctx)
    jobs = [(params, index) for index in range(iters)]
    checked, feasible, failures = 0, 0, []
    for record in imap_ordered(fuzz_case, jobs, nproc):
        checked += 1
        feasible += int(record["feasible"])
        if record["problems"]:
            failures.append(record)
            click.echo(format_reproducer(record), err=True)
            if not keep_going:
                break

    summary = {
        "instances": checked,
        "ok": checked - len(failures),
        "failures": len(failures),
        "feasible_fraction": feasible / checked if checked else 0.0,
        "seed": seed,
    }
    if output_format == "json":
        click.echo(json.dumps({**summary, "mismatches": failures}))
    elif failures:
        click.echo(f"{len(failures)} mismatch(es) in {checked} instances")
    else:
        click.echo(f"{checked} ok (feasible fraction {summary['feasible_fraction']:.3f})")
    ctx.exit(EXIT_MISMATCH if failures else EXIT_OK)


def _witness_problems(name: str, instance, outcome: Outcome) -> typing.List[str]:
    if not outcome.feasible:
        return []
    report = validate(instance, outcome.witness)
    if not report.valid:
        return [f"{name} witness {outcome.witness!r} fails validation: {report}"]
    return []


def fuzz_case(job: typing.Tuple[GenParams, int]) -> typing.Dict[str, typing.Any]:
    """
    Multiprocessing entrypoint: one generated instance through oracle, quartic and cubic
    """
    params, index = job
    instance = gen_instance(params, index)
    expected = brute_force_solve(instance)
    problems: typing.List[str] = []
    lengths = {"oracle": expected.length if expected.feasible else None}
    for name, solver in (
        ("quartic", solvers.solve_quartic),
        ("cubic", solvers.solve_cubic),
    ):
        try:
            outcome = solver(instance)
        except Exception as exc:
            log.exception(f"{name} raised on index {index}")
            problems.append(f"{name} raised {exc!r}")
            continue
        lengths[name] = outcome.length if outcome.feasible else None
        if outcome.feasible != expected.feasible:
            problems.append(
                f"{name} feasible={outcome.feasible}, oracle feasible={expected.feasible}"
            )
        elif outcome.feasible and outcome.length != expected.length:
            problems.append(
                f"{name} length {outcome.length}, oracle length {expected.length}"
            )
        problems += _witness_problems(name, instance, outcome)
    return {
        "seed": params.seed,
        "index": index,
        "x": instance.x,
        "y": instance.y,
        "p": instance.p,
        "q": instance.q,
        "feasible": expected.feasible,
        "lengths": lengths,
        "problems": problems,
    }


def format_reproducer(record: typing.Dict[str, typing.Any]) -> str:
    lines = [
        f"MISMATCH seed={record['seed']} index={record['index']}",
        f"  X={record['x']!r} Y={record['y']!r} P={record['p']!r} Q={record['q']!r}",
        f"  lengths: {record['lengths']}",
    ]
    lines += [f"  {problem}" for problem in record["problems"]]
    return "\n".join(lines)
