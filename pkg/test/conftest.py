import typing
import pytest
from constrained_lcs.models import GenParams, Instance
from constrained_lcs.oracle import gen_instance

# (X, Y, P, Q, expected length or None when infeasible)
HAND_CASES = [
    ("abc", "abc", "b", "d", 3),
    ("abab", "abab", "ab", "bb", 3),
    ("cabac", "abcac", "ba", "cc", 4),
    ("ab", "ab", "ab", "a", None),
    ("ab", "ab", "ba", "c", None),
]


@pytest.fixture(params=HAND_CASES, ids=lambda case: f"{case[0]}-{case[1]}-{case[2]}-{case[3]}")
def hand_case(request) -> typing.Tuple[Instance, typing.Optional[int]]:
    x, y, p, q, expected = request.param
    return Instance(x=x, y=y, p=p, q=q), expected


@pytest.fixture
def seeded_instances() -> typing.Callable[..., typing.List[Instance]]:
    """Factory: deterministic batch of generated instances"""

    def _make(count: int, seed: int = 7, **bounds) -> typing.List[Instance]:
        params = GenParams(seed=seed, **bounds)
        return [gen_instance(params, index) for index in range(count)]

    return _make
