"""
Exhaustive reference solvers and the seeded instance generator used for differential testing.

Generator PRNG: xorshift64 (shifts 13, 7, 17) over a state seeded by splitmix64 from
(seed, index), so any generated instance can be reproduced from those two numbers.
"""
import functools
import logging
import time
from datetime import timedelta
from typing import List, Literal, Tuple
import numpy as np
from numpy.typing import NDArray
from constrained_lcs.core import (
    NEG_INF,
    ExtLen,
    OracleSizeError,
    is_subsequence,
    is_substring,
    segment,
)
from constrained_lcs.models import (
    ORACLE_MAX_N,
    GenParams,
    Instance,
    Outcome,
    SolverStats,
)

log = logging.getLogger(__name__)

TableKind = Literal["f", "v", "h"]
ALPHABET = "abcdefgh"
_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MAX_REDRAWS = 256


def splitmix64(value: int) -> int:
    z = (value + _GOLDEN_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class XorShift64:
    """Marsaglia xorshift64, state never zero"""

    def __init__(self, seed: int, stream: int = 0) -> None:
        self.state = splitmix64((seed & _MASK64) ^ splitmix64(stream & _MASK64))
        if self.state == 0:
            self.state = _GOLDEN_GAMMA

    def next_u64(self) -> int:
        x = self.state
        x ^= (x << 13) & _MASK64
        x ^= x >> 7
        x ^= (x << 17) & _MASK64
        self.state = x
        return x

    def randint(self, low: int, high: int) -> int:
        """Uniform integer in [low, high], modulo reduction"""
        return low + self.next_u64() % (high - low + 1)

    def random(self) -> float:
        """Uniform float in [0, 1) from the top 53 bits"""
        return (self.next_u64() >> 11) / float(1 << 53)

    def string(self, length: int, alphabet: str) -> str:
        return "".join(alphabet[self.randint(0, len(alphabet) - 1)] for _ in range(length))

    def sample_sorted(self, population: int, count: int) -> List[int]:
        """count distinct positions of range(population), ascending (partial Fisher-Yates)"""
        pool = list(range(population))
        for index in range(count):
            pick = self.randint(index, population - 1)
            pool[index], pool[pick] = pool[pick], pool[index]
        return sorted(pool[:count])


def _plant(rng: XorShift64, seq: str, p: str) -> str:
    """Overwrite len(p) random positions of seq so that p becomes a subsequence"""
    symbols = list(seq)
    for position, symbol in zip(rng.sample_sorted(len(seq), len(p)), p):
        symbols[position] = symbol
    return "".join(symbols)


def gen_instance(params: GenParams, index: int) -> Instance:
    """Deterministic random instance for (params.seed, index)"""
    rng = XorShift64(params.seed, index)
    alphabet = ALPHABET[: rng.randint(2, params.alphabet_size)]
    s = rng.randint(1, params.s_max)
    t = rng.randint(1, params.t_max)
    planted = rng.random() < params.plant_probability
    n = rng.randint(1, params.n_max)
    m = rng.randint(1, params.m_max)
    if planted:
        n, m = max(n, s), max(m, s)
    x, y = rng.string(n, alphabet), rng.string(m, alphabet)
    p, q = rng.string(s, alphabet), rng.string(t, alphabet)
    if planted:
        x, y = _plant(rng, x, p), _plant(rng, y, p)
    return Instance(x=x, y=y, p=p, q=q)


def gen_sized_instance(
    seed: int, n: int, m: int, s: int, t: int, alphabet_size: int = 4, plant: bool = True
) -> Instance:
    """
    Random instance with exact lengths.

    With plant set and P fitting into X and Y, P is planted into both and Q is redrawn (up to
    _MAX_REDRAWS times) until it is not a subsequence of P, which makes P itself a solution.
    """
    rng = XorShift64(seed, (n << 48) ^ (m << 32) ^ (s << 16) ^ t)
    alphabet = ALPHABET[:alphabet_size]
    x, y = rng.string(n, alphabet), rng.string(m, alphabet)
    p, q = rng.string(s, alphabet), rng.string(t, alphabet)
    if plant and s <= min(n, m):
        x, y = _plant(rng, x, p), _plant(rng, y, p)
        redraws = 0
        while is_subsequence(q, p) and redraws < _MAX_REDRAWS:
            q = rng.string(t, alphabet)
            redraws += 1
        if is_subsequence(q, p):
            log.warning(f"No Q of length {t} avoiding P={p!r} found, instance is infeasible")
    return Instance(x=x, y=y, p=p, q=q)


@functools.lru_cache(maxsize=64)
def distinct_subsequences(seq: str) -> Tuple[str, ...]:
    """Every distinct subsequence of seq, longest first, ties in lexicographic order"""
    if len(seq) > ORACLE_MAX_N:
        raise OracleSizeError(
            f"cannot enumerate subsequences of a length {len(seq)} sequence (limit {ORACLE_MAX_N})"
        )
    found = {""}
    for symbol in seq:
        found |= {w + symbol for w in found}
    return tuple(sorted(found, key=lambda w: (-len(w), w)))


def brute_force_solve(instance: Instance) -> Outcome:
    """Longest valid string by enumeration; the lexicographically smallest one among optima"""
    start = time.perf_counter()
    checked = 0
    for candidate in distinct_subsequences(instance.x):
        if len(candidate) < instance.s:
            break
        checked += 1
        if (
            is_substring(instance.p, candidate)
            and not is_subsequence(instance.q, candidate)
            and is_subsequence(candidate, instance.y)
        ):
            stats = SolverStats(
                combine_candidates=checked,
                wall_time=timedelta(seconds=time.perf_counter() - start),
            )
            return Outcome(
                feasible=True,
                length=len(candidate),
                witness=candidate,
                algorithm="oracle",
                stats=stats,
            )
    stats = SolverStats(
        combine_candidates=checked,
        wall_time=timedelta(seconds=time.perf_counter() - start),
    )
    return Outcome.infeasible("oracle", stats)


def brute_force_cell(instance: Instance, table_kind: TableKind, indices: Tuple) -> ExtLen:
    """
    Definitional value of one cell of f, v or h.

    f (i, j, k, r): X[1:i], Y[1:j], ends with P[1:k], excludes Q[1:r]
    v (i, j, k): X[1:i], Y[1:j], excludes Q[1:k]
    h (i, j, k): X[i:n], Y[j:m], excludes Q[k:t]
    A zero k or r is unconstrained.
    """
    x, y, p, q = instance.x, instance.y, instance.p, instance.q
    suffix = ""
    if table_kind == "f":
        i, j, k, r = indices
        source, target = segment(x, 1, i), segment(y, 1, j)
        suffix, excluded = segment(p, 1, k), segment(q, 1, r)
    elif table_kind == "v":
        i, j, k = indices
        source, target = segment(x, 1, i), segment(y, 1, j)
        excluded = segment(q, 1, k)
    elif table_kind == "h":
        i, j, k = indices
        source, target = segment(x, i, len(x)), segment(y, j, len(y))
        excluded = segment(q, k, len(q))
    else:
        raise ValueError(f"Unsupported table kind {table_kind}")

    for candidate in distinct_subsequences(source):
        if not candidate.endswith(suffix):
            continue
        if excluded and is_subsequence(excluded, candidate):
            continue
        if is_subsequence(candidate, target):
            return len(candidate)
    return NEG_INF


def brute_force_table(instance: Instance, table_kind: TableKind) -> NDArray:
    """Whole table by brute_force_cell, shaped like the DP array (unused cells left at 0)"""
    n, m, s, t = instance.n, instance.m, instance.s, instance.t
    if table_kind == "f":
        table = np.zeros((n + 1, m + 1, s + 1, t + 1), dtype=np.int64)
        for index in np.ndindex(*table.shape):
            table[index] = brute_force_cell(instance, "f", index)
    elif table_kind == "v":
        table = np.zeros((n + 1, m + 1, t + 1), dtype=np.int64)
        for index in np.ndindex(*table.shape):
            table[index] = brute_force_cell(instance, "v", index)
    else:
        table = np.zeros((n + 2, m + 2, t + 1), dtype=np.int64)
        for i in range(1, n + 2):
            for j in range(1, m + 2):
                for k in range(1, t + 1):
                    table[i, j, k] = brute_force_cell(instance, "h", (i, j, k))
    return table
