"""
Sequence predicates, extended-length arithmetic and the errors shared by every table and solver.

Sequences are plain ``str`` values. All public contracts use 1-based positions, so
``symbol_at(X, 1)`` is the first symbol and ``segment(X, i, j)`` is ``X[i:j]`` inclusive.
"""
from __future__ import annotations
import logging
from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from constrained_lcs.models import Instance, ValidationReport

log = logging.getLogger(__name__)

# Lengths are never negative, so anything below zero collapses back onto this sentinel.
NEG_INF: int = -(1 << 40)
ExtLen = int
Sequence = str


class CapacityError(MemoryError):
    """Raised when the tables for an instance would exceed the configured memory budget"""

    def __init__(self, requested_bytes: int, budget_bytes: int, what: str = "tables"):
        self.requested_bytes = requested_bytes
        self.budget_bytes = budget_bytes
        super().__init__(
            f"{what} need {requested_bytes} bytes, memory budget is {budget_bytes} bytes"
        )


class NoWitnessError(ValueError):
    """Raised when a traceback is started from a cell holding NEG_INF"""


class OracleSizeError(ValueError):
    """Raised when the exhaustive oracle is asked for an input it cannot enumerate"""


CELL_BYTES = 8  # int64 cells


def table_bytes(*shape: int) -> int:
    cells = 1
    for extent in shape:
        cells *= extent
    return cells * CELL_BYTES


def ensure_capacity(
    requested_bytes: int, budget_bytes: Optional[int], what: str = "tables"
) -> None:
    if budget_bytes is not None and requested_bytes > budget_bytes:
        raise CapacityError(requested_bytes, budget_bytes, what)


def is_finite(value: ExtLen) -> bool:
    return value >= 0


def ext_add(*values: ExtLen) -> ExtLen:
    """Sum of extended lengths, NEG_INF if any term is NEG_INF"""
    if any(value < 0 for value in values):
        return NEG_INF
    return sum(values)


def format_ext(value: ExtLen) -> str:
    return str(value) if is_finite(value) else "-inf"


def symbol_at(seq: Sequence, i: int) -> str:
    """1-based symbol access"""
    if not 1 <= i <= len(seq):
        raise IndexError(f"position {i} outside 1..{len(seq)}")
    return seq[i - 1]


def segment(seq: Sequence, i: int, j: int) -> Sequence:
    """1-based inclusive slice seq[i:j], empty when i > j"""
    if i > j:
        return ""
    if i < 1 or j > len(seq):
        raise IndexError(f"segment [{i}:{j}] outside 1..{len(seq)}")
    return seq[i - 1 : j]


def is_subsequence(needle: Sequence, haystack: Sequence) -> bool:
    # Greedy left-to-right embedding: each `in` consumes the iterator up to the match
    remaining = iter(haystack)
    return all(symbol in remaining for symbol in needle)


def is_substring(needle: Sequence, haystack: Sequence) -> bool:
    return needle in haystack


def longest_q_prefix(w: Sequence, q: Sequence) -> int:
    """Largest r such that Q[1:r] is a subsequence of w, found with one greedy scan of w"""
    r = 0
    for symbol in w:
        if r < len(q) and symbol == q[r]:
            r += 1
    return r


def plain_lcs_length(x: Sequence, y: Sequence) -> int:
    """Unconstrained LCS length using two rolling rows"""
    previous = [0] * (len(y) + 1)
    for symbol in x:
        current = [0] * (len(y) + 1)
        for j, other in enumerate(y, start=1):
            if symbol == other:
                current[j] = previous[j - 1] + 1
            else:
                current[j] = max(previous[j], current[j - 1])
        previous = current
    return previous[-1]


def validate(instance: "Instance", candidate: Sequence) -> "ValidationReport":
    """Checks candidate directly against the problem definition"""
    # delayed import, models depends on this module
    from constrained_lcs.models import ValidationReport

    report = ValidationReport(
        is_common_subsequence=is_subsequence(candidate, instance.x)
        and is_subsequence(candidate, instance.y),
        includes_p_substring=is_substring(instance.p, candidate),
        excludes_q_subsequence=not is_subsequence(instance.q, candidate),
        length=len(candidate),
    )
    log.debug(f"validated {candidate!r}: {report}")
    return report
