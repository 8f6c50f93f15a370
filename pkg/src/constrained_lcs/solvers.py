"""
End-to-end solvers.

Quartic: f(i, j, s, r) + h(i+1, j+1, r) maximised over i, j, r, O(nmst) time.
Cubic: v(i-1, j-1, k) + s + h(lx_i+1, ly_j+1, k + alpha[k]) maximised over the compact
appearances of P and k, O(nmt) time.

Ties among equal-length optima go to the smallest decomposition in loop order.
"""
import logging
import time
from datetime import timedelta
from typing import Optional
import numpy as np
from constrained_lcs.core import NEG_INF, ensure_capacity
from constrained_lcs.models import (
    Algorithm,
    Instance,
    Outcome,
    SolutionIndices,
    SolverConfig,
    SolverStats,
)
from constrained_lcs.tables.exclusion import (
    build_forward_table,
    build_reverse_table,
    forward_table_bytes,
    reverse_table_bytes,
    traceback_forward,
    traceback_reverse,
)
from constrained_lcs.tables.preprocess import build_prep
from constrained_lcs.tables.suffix import (
    build_suffix_table,
    suffix_table_bytes,
    traceback_suffix,
)

log = logging.getLogger(__name__)


def estimate_table_bytes(instance: Instance, algorithm: Algorithm) -> int:
    """Bytes of DP tables a solve will allocate"""
    n, m, s, t = instance.n, instance.m, instance.s, instance.t
    if algorithm == "quartic":
        return suffix_table_bytes(n, m, s, t) + reverse_table_bytes(n, m, t)
    if algorithm == "cubic":
        prep_bytes = 8 * (n + m + t + 3)
        return forward_table_bytes(n, m, t) + reverse_table_bytes(n, m, t) + prep_bytes
    return 0


def _elapsed(start: float) -> timedelta:
    return timedelta(seconds=time.perf_counter() - start)


def solve_quartic(instance: Instance, memory_budget: Optional[int] = None) -> Outcome:
    start = time.perf_counter()
    ensure_capacity(
        estimate_table_bytes(instance, "quartic"), memory_budget, "quartic solver tables"
    )
    x, y, q = instance.x, instance.y, instance.q
    n, m, s, t = instance.n, instance.m, instance.s, instance.t
    f = build_suffix_table(instance)
    h = build_reverse_table(x, y, q)
    stats = SolverStats(
        cell_updates=f.update_count + h.update_count,
        table_updates={"f": f.update_count, "h": h.update_count},
        combine_candidates=n * m * t,
    )

    prefix = f.cells[1:, 1:, s, 1:]
    scores = np.where(prefix >= 0, prefix + h.cells[2:, 2:, 1:], NEG_INF)
    if scores.size == 0 or scores.max() < 0:
        stats.wall_time = _elapsed(start)
        log.debug(f"quartic: {instance} is infeasible")
        return Outcome.infeasible("quartic", stats)

    best_i, best_j, best_r = np.unravel_index(int(np.argmax(scores)), scores.shape)
    i, j, r = int(best_i) + 1, int(best_j) + 1, int(best_r) + 1
    length = int(scores[best_i, best_j, best_r])
    witness = traceback_suffix(f, instance, i, j, s, r) + traceback_reverse(
        h, x, y, q, i + 1, j + 1, r
    )
    stats.wall_time = _elapsed(start)
    log.debug(f"quartic: length {length} at (i={i}, j={j}, r={r})")
    return Outcome(
        feasible=True,
        length=length,
        witness=witness,
        indices=SolutionIndices(i=i, j=j, k=None, r=r),
        algorithm="quartic",
        stats=stats,
    )


def solve_cubic(instance: Instance, memory_budget: Optional[int] = None) -> Outcome:
    start = time.perf_counter()
    ensure_capacity(
        estimate_table_bytes(instance, "cubic"), memory_budget, "cubic solver tables"
    )
    x, y, p, q = instance.x, instance.y, instance.p, instance.q
    s, t = instance.s, instance.t
    v = build_forward_table(x, y, q)
    h = build_reverse_table(x, y, q)
    prep = build_prep(instance)

    rows = np.flatnonzero(prep.lx[1:]) + 1
    cols = np.flatnonzero(prep.ly[1:]) + 1
    ks = np.arange(1, t + 1)
    rs = ks + prep.alpha[1:]
    # k + alpha[k] > t: P would complete Q on top of the prefix, never a valid split
    usable = rs <= t
    ks, rs = ks[usable], rs[usable]
    stats = SolverStats(
        cell_updates=v.update_count + h.update_count,
        table_updates={"v": v.update_count, "h": h.update_count},
        combine_candidates=rows.size * cols.size * ks.size,
    )
    if stats.combine_candidates == 0:
        stats.wall_time = _elapsed(start)
        log.debug(f"cubic: {instance} is infeasible")
        return Outcome.infeasible("cubic", stats)

    scores = (
        v.cells[np.ix_(rows - 1, cols - 1, ks)]
        + h.cells[np.ix_(prep.lx[rows] + 1, prep.ly[cols] + 1, rs)]
        + s
    )
    best_a, best_b, best_c = np.unravel_index(int(np.argmax(scores)), scores.shape)
    i, j = int(rows[best_a]), int(cols[best_b])
    k, r = int(ks[best_c]), int(rs[best_c])
    length = int(scores[best_a, best_b, best_c])
    witness = (
        traceback_forward(v, x, y, q, i - 1, j - 1, k)
        + p
        + traceback_reverse(h, x, y, q, int(prep.lx[i]) + 1, int(prep.ly[j]) + 1, r)
    )
    stats.wall_time = _elapsed(start)
    log.debug(f"cubic: length {length} at (i={i}, j={j}, k={k}, r={r})")
    return Outcome(
        feasible=True,
        length=length,
        witness=witness,
        indices=SolutionIndices(i=i, j=j, k=k, r=r),
        algorithm="cubic",
        stats=stats,
    )


def solve(instance: Instance, config: Optional[SolverConfig] = None) -> Outcome:
    """Runs the solver selected by config (environment driven when not given)"""
    if config is None:
        config = SolverConfig()
    if config.algorithm == "quartic":
        outcome = solve_quartic(instance, config.memory_budget)
    elif config.algorithm == "cubic":
        outcome = solve_cubic(instance, config.memory_budget)
    elif config.algorithm == "oracle":
        # delayed import, the oracle is only needed for verification runs
        from constrained_lcs.oracle import brute_force_solve

        outcome = brute_force_solve(instance)
    else:
        raise ValueError(f"Unsupported algorithm {config.algorithm}")
    if not config.collect_stats:
        outcome = outcome.copy(update={"stats": None})
    return outcome
