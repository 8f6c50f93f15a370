"""
Compact appearances of P in X and Y, and how far P can advance a partially matched Q.
"""
import logging
import numpy as np
from numpy.typing import NDArray
from constrained_lcs.core import symbol_at
from constrained_lcs.models import Instance

log = logging.getLogger(__name__)


class PrepTables:
    """
    lx[i] / ly[j]: end of the compact appearance of P starting at i / j, 0 if there is none.
    alpha[k]: longest r such that Q[k:k+r-1] is a subsequence of P.

    All three arrays are 1-based; index 0 is padding.
    """

    def __init__(self, lx: NDArray, ly: NDArray, alpha: NDArray) -> None:
        self.lx = lx
        self.ly = ly
        self.alpha = alpha


def compact_end(seq: str, i: int, p: str) -> int:
    """Smallest e such that P is a subsequence of seq[i:e] starting with seq_i = p_1, else 0"""
    if symbol_at(seq, i) != symbol_at(p, 1):
        return 0
    matched = 1
    if matched == len(p):
        return i
    # both pointers advance on a match, one symbol of seq never serves two symbols of P
    for position in range(i + 1, len(seq) + 1):
        if symbol_at(seq, position) == symbol_at(p, matched + 1):
            matched += 1
            if matched == len(p):
                return position
    return 0


def overlap(p: str, q: str, k: int) -> int:
    """Greedy embedding of Q[k:t] into P from the left; number of Q symbols matched"""
    a, b, matched = k - 1, 0, 0
    while a < len(q) and b < len(p):
        if q[a] == p[b]:
            a += 1
            matched += 1
        b += 1
    return matched


def build_prep(instance: Instance) -> PrepTables:
    x, y, p, q = instance.x, instance.y, instance.p, instance.q
    lx = np.zeros(instance.n + 1, dtype=np.int64)
    ly = np.zeros(instance.m + 1, dtype=np.int64)
    alpha = np.zeros(instance.t + 1, dtype=np.int64)
    for i in range(1, instance.n + 1):
        lx[i] = compact_end(x, i, p)
    for j in range(1, instance.m + 1):
        ly[j] = compact_end(y, j, p)
    for k in range(1, instance.t + 1):
        alpha[k] = overlap(p, q, k)
    log.debug(
        f"prep: {np.count_nonzero(lx)} compact starts in X, {np.count_nonzero(ly)} in Y, alpha={alpha[1:].tolist()}"
    )
    return PrepTables(lx, ly, alpha)
