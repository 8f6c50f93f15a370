import pytest
from hypothesis import given
from hypothesis.strategies import text
from constrained_lcs.core import is_subsequence
from constrained_lcs.models import Instance
from constrained_lcs.tables.preprocess import build_prep, compact_end, overlap

small_text = text(alphabet="abc", min_size=1, max_size=8)


@pytest.mark.parametrize("i,expected", [(1, 3), (2, 3), (3, 0), (4, 5), (5, 0)])
def test_compact_end_examples(i, expected):
    assert compact_end("aabab", i, "ab") == expected


def test_compact_end_does_not_reuse_a_symbol():
    # a single 'a' cannot serve both symbols of "aa"
    assert compact_end("ab", 1, "aa") == 0
    assert compact_end("aba", 1, "aa") == 3
    assert compact_end("a", 1, "a") == 1


@given(small_text, small_text)
def test_compact_end_is_shortest_window(seq, p):
    for i in range(1, len(seq) + 1):
        end = compact_end(seq, i, p)
        windows = [
            e
            for e in range(i, len(seq) + 1)
            if seq[i - 1] == p[0] and is_subsequence(p[1:], seq[i : e])
        ]
        assert end == (windows[0] if windows else 0)


@pytest.mark.parametrize(
    "p,q,expected",
    [("abc", "bca", [2, 1, 1]), ("abc", "ac", [2, 1]), ("a", "bb", [0, 0])],
)
def test_overlap_examples(p, q, expected):
    assert [overlap(p, q, k) for k in range(1, len(q) + 1)] == expected


@given(small_text, small_text)
def test_overlap_is_longest_embeddable_run(p, q):
    for k in range(1, len(q) + 1):
        longest = max(
            r for r in range(len(q) - k + 2) if is_subsequence(q[k - 1 : k - 1 + r], p)
        )
        assert overlap(p, q, k) == longest


@given(small_text, small_text)
def test_prefix_plus_overlap_never_decreases(p, q):
    reach = [k + overlap(p, q, k) for k in range(1, len(q) + 1)]
    assert reach == sorted(reach)


def test_build_prep():
    prep = build_prep(Instance(x="aabab", y="bab", p="ab", q="bca"))
    assert prep.lx.tolist() == [0, 3, 3, 0, 5, 0]
    assert prep.ly.tolist() == [0, 0, 3, 0]
    assert prep.alpha.tolist() == [0, 1, 0, 1]
