import click
import logging
import typing
from pathlib import Path
import pandas as pd
from constrained_lcs.core import CapacityError
from constrained_lcs.models import SolverConfig
from constrained_lcs.oracle import gen_sized_instance
from constrained_lcs.solvers import estimate_table_bytes, solve
from constrained_lcs.cli.commands.shared import output_format_option
from constrained_lcs.utils import get_nproc, imap_ordered

log = logging.getLogger(__name__)

_ALGORITHMS = ("quartic", "cubic")
_INTEGER_COLUMNS = (
    "length",
    "f_updates",
    "v_updates",
    "h_updates",
    "cell_updates",
    "combine_candidates",
)


def parse_int_list(ctx, param, value: str) -> typing.List[int]:
    try:
        values = [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma separated integers, got {value!r}")
    if not values or any(v < 1 for v in values):
        raise click.BadParameter("values must be positive integers")
    return values


@click.command()
@click.option("--n", "n", help="Length of X", type=click.types.INT, default=150, show_default=True)
@click.option("--m", "m", help="Length of Y, defaults to --n", type=click.types.INT, default=None)
@click.option("--t", "t", help="Length of Q", type=click.types.INT, default=4, show_default=True)
@click.option(
    "--s",
    "s_values",
    help="Comma separated lengths of P",
    default="4,8,16",
    show_default=True,
    callback=parse_int_list,
)
@click.option("--seed", type=click.types.INT, default=0, show_default=True)
@click.option(
    "--alphabet-size", "alphabet_size", type=click.IntRange(2, 8), default=4, show_default=True
)
@click.option(
    "--memory-budget",
    "memory_budget",
    help="Largest table size in bytes. Defaults to CLCS_MEMORY_BUDGET or 512 MiB",
    type=click.types.INT,
    default=None,
)
@click.option(
    "--output",
    "-o",
    "output_path",
    help="Also write the table to a .xlsx or .csv file",
    required=False,
    default=None,
    type=click.types.Path(dir_okay=False, writable=True, path_type=Path, resolve_path=True),
)
@output_format_option
@click.pass_context
def bench(
    ctx: click.Context,
    n: int,
    m: typing.Optional[int],
    t: int,
    s_values: typing.List[int],
    seed: int,
    alphabet_size: int,
    memory_budget: typing.Optional[int],
    output_path: typing.Optional[Path],
    output_format: str,
):
    """
    Times both solvers over a grid of P lengths at fixed n, m and t.

    Exact DP cell-update counts are the primary signal (quartic grows with s, cubic does not);
    wall time is informational.
    """
    if m is None:
        m = n
    if n < 0 or m < 0 or t < 1:
        raise click.UsageError("--n and --m must be >= 0 and --t >= 1")
    if output_path is not None and output_path.suffix.lower() not in (".xlsx", ".csv"):
        raise click.UsageError("--output must end in .xlsx or .csv")
    budget = (
        memory_budget if memory_budget is not None else SolverConfig().memory_budget
    )

    jobs = [
        (seed, n, m, s, t, alphabet_size, algorithm, budget)
        for s in s_values
        for algorithm in _ALGORITHMS
    ]
    rows = list(imap_ordered(bench_case, jobs, get_nproc(ctx)))
    df_results = pd.DataFrame.from_records(rows)
    # infeasible and over-budget rows leave gaps, keep the count columns integral
    for column in _INTEGER_COLUMNS:
        if column in df_results:
            df_results[column] = df_results[column].astype("Int64")

    if output_format == "json":
        click.echo(df_results.to_json(orient="records"))
    else:
        click.echo(df_results.to_string(index=False))
    if output_path is not None:
        output_path.parent.mkdir(parents=True, exist_ok=True)
        if output_path.suffix.lower() == ".xlsx":
            df_results.to_excel(str(output_path), sheet_name="bench", index=False)
        else:
            df_results.to_csv(str(output_path), index=False)
        log.info(f"Bench table written to {output_path}")


def bench_case(job: typing.Tuple) -> typing.Dict[str, typing.Any]:
    """
    Multiprocessing entrypoint: one (s, algorithm) configuration
    """
    seed, n, m, s, t, alphabet_size, algorithm, budget = job
    instance = gen_sized_instance(seed, n, m, s, t, alphabet_size)
    row: typing.Dict[str, typing.Any] = {
        "algorithm": algorithm,
        "n": n,
        "m": m,
        "s": s,
        "t": t,
        "table_bytes": estimate_table_bytes(instance, algorithm),
    }
    config = SolverConfig(algorithm=algorithm, memory_budget=budget, collect_stats=True)
    try:
        outcome = solve(instance, config)
    except CapacityError as exc:
        log.warning(f"{algorithm} s={s}: {exc}")
        row["error"] = str(exc)
        return row
    stats = outcome.stats
    row.update(
        {
            "length": outcome.length if outcome.feasible else None,
            "f_updates": stats.table_updates.get("f", 0),
            "v_updates": stats.table_updates.get("v", 0),
            "h_updates": stats.table_updates.get("h", 0),
            "cell_updates": stats.cell_updates,
            "combine_candidates": stats.combine_candidates,
            "wall_time_s": stats.wall_time.total_seconds(),
            "error": None,
        }
    )
    log.info(f"{algorithm} s={s}: {stats.cell_updates} cell updates in {row['wall_time_s']:.3f}s")
    return row
