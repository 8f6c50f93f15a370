"""
Suffix-constrained table f(i, j, k, r).

f(i, j, k, r) is the length of a longest common subsequence of X[1:i] and Y[1:j] that
ends with P[1:k] and does not contain Q[1:r] as a subsequence. k = 0 and r = 0 mean
"no constraint". Cells without any such subsequence hold NEG_INF.
"""
import logging
from typing import Dict, Optional, Tuple
import numpy as np
from numpy.typing import NDArray
from constrained_lcs.core import (
    NEG_INF,
    NoWitnessError,
    ensure_capacity,
    ext_add,
    format_ext,
    table_bytes,
)
from constrained_lcs.models import Instance
from constrained_lcs.tables.shared import TABLE_DTYPE, extend, symbol_mask

log = logging.getLogger(__name__)


class SuffixTable:
    """Dense f table, row-major in (i, j, k, r)"""

    def __init__(self, cells: NDArray, update_count: int) -> None:
        self.cells = cells
        self.update_count = update_count

    @property
    def dims(self) -> Tuple[int, int, int, int]:
        n1, m1, s1, t1 = self.cells.shape
        return (n1 - 1, m1 - 1, s1 - 1, t1 - 1)

    def __getitem__(self, index: Tuple[int, int, int, int]) -> int:
        return int(self.cells[index])


def suffix_table_bytes(n: int, m: int, s: int, t: int) -> int:
    return table_bytes(n + 1, m + 1, s + 1, t + 1)


def _match_layer(
    previous: NDArray, source_rows: NDArray, takes: NDArray, q_hits: NDArray
) -> NDArray:
    """
    All (k, r) cells of f(i, j, ., .) when x_i = y_j, given previous = f(i-1, j-1, ., .).

    takes[k] is set where x_i may close the suffix P[1:k] (k = 0 or p_k = x_i), source_rows[k]
    is the row that appending x_i extends (k-1, or 0 for k = 0) and q_hits[r] marks q_r = x_i.
    """
    source = previous[source_rows]
    appended = extend(source)
    # 1 + f(i-1, j-1, k', r-1) only for r >= 2, appending q_1 can never keep Q[1:1] out
    appended_shift = np.full_like(previous, NEG_INF)
    appended_shift[:, 2:] = extend(source[:, 1:-1])
    on_q = np.maximum(appended_shift, previous)
    taken = np.where(q_hits[np.newaxis, :], on_q, appended)
    return np.where(takes[:, np.newaxis], taken, previous)


def build_suffix_table(
    instance: Instance, memory_budget: Optional[int] = None
) -> SuffixTable:
    """
    Fills every cell of f. Boundary cells are 0 for k = 0 (any r) and NEG_INF for k >= 1.
    """
    x, y, p, q = instance.x, instance.y, instance.p, instance.q
    n, m, s, t = instance.n, instance.m, instance.s, instance.t
    ensure_capacity(suffix_table_bytes(n, m, s, t), memory_budget, "suffix table f")

    cells = np.full((n + 1, m + 1, s + 1, t + 1), NEG_INF, dtype=TABLE_DTYPE)
    cells[0, :, 0, :] = 0
    cells[:, 0, 0, :] = 0

    source_rows = np.maximum(np.arange(s + 1) - 1, 0)
    masks: Dict[str, Tuple[NDArray, NDArray]] = {}
    for i in range(1, n + 1):
        symbol = x[i - 1]
        if symbol not in masks:
            masks[symbol] = (
                symbol_mask(p, symbol, pad=True),
                symbol_mask(q, symbol, pad=False),
            )
        takes, q_hits = masks[symbol]
        for j in range(1, m + 1):
            if symbol != y[j - 1]:
                np.maximum(cells[i - 1, j], cells[i, j - 1], out=cells[i, j])
            else:
                cells[i, j] = _match_layer(
                    cells[i - 1, j - 1], source_rows, takes, q_hits
                )

    update_count = n * m * (s + 1) * (t + 1)
    log.debug(f"f table {cells.shape} built with {update_count} cell updates")
    return SuffixTable(cells, update_count)


def traceback_suffix(
    table: SuffixTable, instance: Instance, i: int, j: int, k: int, r: int
) -> str:
    """
    A witness of length f(i, j, k, r): a common subsequence of X[1:i] and Y[1:j] ending with
    P[1:k] and excluding Q[1:r]. Branches follow the build order, ties go to the first
    alternative (the i-1 neighbour, then appending x_i).
    """
    f = table.cells
    if f[i, j, k, r] < 0:
        raise NoWitnessError(
            f"f({i},{j},{k},{r}) is {format_ext(int(f[i, j, k, r]))}, no witness exists"
        )
    x, y, p, q = instance.x, instance.y, instance.p, instance.q
    reversed_witness = []
    while i > 0 and j > 0:
        symbol = x[i - 1]
        if symbol != y[j - 1]:
            if f[i - 1, j, k, r] >= f[i, j - 1, k, r]:
                i -= 1
            else:
                j -= 1
            continue
        if k > 0 and symbol != p[k - 1]:
            i, j = i - 1, j - 1
            continue
        source_k = max(k - 1, 0)
        if r == 0 or symbol != q[r - 1]:
            reversed_witness.append(symbol)
            k = source_k
        elif r > 1:
            appended = ext_add(1, int(f[i - 1, j - 1, source_k, r - 1]))
            if appended >= 0 and appended >= f[i - 1, j - 1, k, r]:
                reversed_witness.append(symbol)
                k, r = source_k, r - 1
        i, j = i - 1, j - 1
    return "".join(reversed(reversed_witness))
