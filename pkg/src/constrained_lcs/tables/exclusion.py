"""
Exclusion tables for the subsequence-exclusion LCS.

v(i, j, k): longest common subsequence of the prefixes X[1:i], Y[1:j] that does not contain
Q[1:k] as a subsequence (k = 0 means unconstrained).

h(i, j, k): longest common subsequence of the suffixes X[i:n], Y[j:m] that does not contain
Q[k:t] as a subsequence, for 1 <= k <= t.

Every cell is finite: the empty string excludes any non-empty constraint.
"""
import logging
from typing import Dict, Optional, Tuple
import numpy as np
from numpy.typing import NDArray
from constrained_lcs.core import NEG_INF, ensure_capacity, table_bytes
from constrained_lcs.tables.shared import TABLE_DTYPE, symbol_mask

log = logging.getLogger(__name__)


class ForwardTable:
    """v table, indexed (i: 0..n, j: 0..m, k: 0..t)"""

    def __init__(self, cells: NDArray, update_count: int) -> None:
        self.cells = cells
        self.update_count = update_count

    def __getitem__(self, index: Tuple[int, int, int]) -> int:
        return int(self.cells[index])


class ReverseTable:
    """
    h table, indexed (i: 1..n+1, j: 1..m+1, k: 1..t).

    The array also carries row/column 0 and the k = 0 layer so indices can be used as is,
    those cells are never read.
    """

    def __init__(self, cells: NDArray, update_count: int) -> None:
        self.cells = cells
        self.update_count = update_count

    def __getitem__(self, index: Tuple[int, int, int]) -> int:
        return int(self.cells[index])


def forward_table_bytes(n: int, m: int, t: int) -> int:
    return table_bytes(n + 1, m + 1, t + 1)


def reverse_table_bytes(n: int, m: int, t: int) -> int:
    return table_bytes(n + 2, m + 2, t + 1)


def build_forward_table(
    x: str, y: str, q: str, memory_budget: Optional[int] = None
) -> ForwardTable:
    n, m, t = len(x), len(y), len(q)
    ensure_capacity(forward_table_bytes(n, m, t), memory_budget, "forward table v")
    cells = np.zeros((n + 1, m + 1, t + 1), dtype=TABLE_DTYPE)
    hits_by_symbol: Dict[str, NDArray] = {}
    for i in range(1, n + 1):
        symbol = x[i - 1]
        if symbol not in hits_by_symbol:
            hits_by_symbol[symbol] = symbol_mask(q, symbol, pad=False)
        q_hits = hits_by_symbol[symbol]
        for j in range(1, m + 1):
            if symbol != y[j - 1]:
                np.maximum(cells[i - 1, j], cells[i, j - 1], out=cells[i, j])
                continue
            previous = cells[i - 1, j - 1]
            # max(1 + v(i-1, j-1, k-1), v(i-1, j-1, k)) applies from k = 2 on
            appended_shift = np.full_like(previous, NEG_INF)
            appended_shift[2:] = previous[1:-1] + 1
            cells[i, j] = np.where(
                q_hits, np.maximum(appended_shift, previous), previous + 1
            )
    update_count = n * m * (t + 1)
    log.debug(f"v table {cells.shape} built with {update_count} cell updates")
    return ForwardTable(cells, update_count)


def build_reverse_table(
    x: str, y: str, q: str, memory_budget: Optional[int] = None
) -> ReverseTable:
    n, m, t = len(x), len(y), len(q)
    ensure_capacity(reverse_table_bytes(n, m, t), memory_budget, "reverse table h")
    cells = np.zeros((n + 2, m + 2, t + 1), dtype=TABLE_DTYPE)
    hits_by_symbol: Dict[str, NDArray] = {}
    for i in range(n, 0, -1):
        symbol = x[i - 1]
        if symbol not in hits_by_symbol:
            hits_by_symbol[symbol] = symbol_mask(q, symbol, pad=False)
        q_hits = hits_by_symbol[symbol]
        for j in range(m, 0, -1):
            if symbol != y[j - 1]:
                np.maximum(cells[i + 1, j], cells[i, j + 1], out=cells[i, j])
                continue
            following = cells[i + 1, j + 1]
            # max(1 + h(i+1, j+1, k+1), h(i+1, j+1, k)) applies for k < t
            appended_shift = np.full_like(following, NEG_INF)
            appended_shift[1:t] = following[2:] + 1
            layer = np.where(
                q_hits, np.maximum(appended_shift, following), following + 1
            )
            layer[0] = 0
            cells[i, j] = layer
    update_count = n * m * t
    log.debug(f"h table {cells.shape} built with {update_count} cell updates")
    return ReverseTable(cells, update_count)


def traceback_forward(
    table: ForwardTable, x: str, y: str, q: str, i: int, j: int, k: int
) -> str:
    """Witness of length v(i, j, k) over the prefixes X[1:i], Y[1:j]"""
    v = table.cells
    reversed_witness = []
    while i > 0 and j > 0:
        symbol = x[i - 1]
        if symbol != y[j - 1]:
            if v[i - 1, j, k] >= v[i, j - 1, k]:
                i -= 1
            else:
                j -= 1
            continue
        if k == 0 or symbol != q[k - 1]:
            reversed_witness.append(symbol)
        elif k > 1 and 1 + v[i - 1, j - 1, k - 1] >= v[i - 1, j - 1, k]:
            reversed_witness.append(symbol)
            k -= 1
        i, j = i - 1, j - 1
    return "".join(reversed(reversed_witness))


def traceback_reverse(
    table: ReverseTable, x: str, y: str, q: str, i: int, j: int, k: int
) -> str:
    """Witness of length h(i, j, k) over the suffixes X[i:n], Y[j:m], in string order"""
    h = table.cells
    n, m, t = len(x), len(y), len(q)
    witness = []
    while i <= n and j <= m:
        symbol = x[i - 1]
        if symbol != y[j - 1]:
            if h[i + 1, j, k] >= h[i, j + 1, k]:
                i += 1
            else:
                j += 1
            continue
        if symbol != q[k - 1]:
            witness.append(symbol)
        elif k < t and 1 + h[i + 1, j + 1, k + 1] >= h[i + 1, j + 1, k]:
            witness.append(symbol)
            k += 1
        i, j = i + 1, j + 1
    return "".join(witness)
