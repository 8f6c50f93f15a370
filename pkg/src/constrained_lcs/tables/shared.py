# This file contains helpers shared by the DP table builders
import numpy as np
from numpy.typing import NDArray
from constrained_lcs.core import NEG_INF

TABLE_DTYPE = np.int64


def extend(layer: NDArray) -> NDArray:
    """1 + layer element-wise, keeping NEG_INF cells at NEG_INF"""
    return np.where(layer >= 0, layer + 1, NEG_INF)


def symbol_mask(constraint: str, symbol: str, pad: bool) -> NDArray:
    """
    Boolean mask over 0..len(constraint) marking positions (1-based) holding symbol.

    Position 0 is filled with `pad`.
    """
    mask = np.zeros(len(constraint) + 1, dtype=bool)
    mask[0] = pad
    mask[1:] = [other == symbol for other in constraint]
    return mask
