import pytest
from hypothesis import given
from hypothesis.strategies import text
from constrained_lcs.core import (
    NEG_INF,
    CapacityError,
    ensure_capacity,
    ext_add,
    format_ext,
    is_subsequence,
    is_substring,
    longest_q_prefix,
    plain_lcs_length,
    segment,
    symbol_at,
    validate,
)
from constrained_lcs.models import Instance

small_text = text(alphabet="abc", max_size=8)


@pytest.mark.parametrize(
    "needle,haystack,expected",
    [("", "abc", True), ("ac", "abc", True), ("ca", "abc", False), ("aa", "a", False)],
)
def test_is_subsequence(needle, haystack, expected):
    assert is_subsequence(needle, haystack) == expected


@pytest.mark.parametrize(
    "needle,haystack,expected",
    [("", "abc", True), ("bc", "abc", True), ("ac", "abc", False)],
)
def test_is_substring(needle, haystack, expected):
    assert is_substring(needle, haystack) == expected


@pytest.mark.parametrize(
    "w,q,expected", [("abac", "cc", 1), ("", "ab", 0), ("ba", "ab", 1), ("aabb", "ab", 2)]
)
def test_longest_q_prefix(w, q, expected):
    assert longest_q_prefix(w, q) == expected


@given(small_text, small_text)
def test_longest_q_prefix_matches_prefix_checks(w, q):
    expected = max(r for r in range(len(q) + 1) if is_subsequence(q[:r], w))
    assert longest_q_prefix(w, q) == expected


@given(small_text, small_text)
def test_substring_implies_subsequence(needle, haystack):
    if is_substring(needle, haystack):
        assert is_subsequence(needle, haystack)


@given(small_text, small_text)
def test_plain_lcs_length_bounds(x, y):
    length = plain_lcs_length(x, y)
    assert 0 <= length <= min(len(x), len(y))
    assert plain_lcs_length(y, x) == length


def test_plain_lcs_length_examples():
    assert plain_lcs_length("abcbdab", "bdcaba") == 4
    assert plain_lcs_length("", "abc") == 0


def test_extended_arithmetic():
    assert ext_add(1, 2) == 3
    assert ext_add(1, NEG_INF) == NEG_INF
    assert format_ext(NEG_INF) == "-inf"
    assert format_ext(4) == "4"


def test_one_based_access():
    assert symbol_at("abc", 1) == "a"
    assert segment("abcde", 2, 4) == "bcd"
    assert segment("abc", 3, 2) == ""
    with pytest.raises(IndexError):
        symbol_at("abc", 0)


def test_ensure_capacity():
    ensure_capacity(100, None)
    ensure_capacity(100, 100)
    with pytest.raises(CapacityError) as excinfo:
        ensure_capacity(101, 100, "f")
    assert excinfo.value.requested_bytes == 101
    assert excinfo.value.budget_bytes == 100


def test_validate_examples():
    instance = Instance(x="abc", y="abc", p="b", q="d")
    report = validate(instance, "abc")
    assert report.valid and report.length == 3

    report = validate(instance, "ac")
    assert not report.valid
    assert report.is_common_subsequence and not report.includes_p_substring

    report = validate(Instance(x="abab", y="abab", p="ab", q="bb"), "abab")
    assert not report.valid
    assert report.includes_p_substring and not report.excludes_q_subsequence


@pytest.mark.parametrize("field,value", [("p", ""), ("q", "")])
def test_instance_rejects_empty_constraints(field, value):
    values = {"x": "ab", "y": "ab", "p": "a", "q": "b", field: value}
    with pytest.raises(ValueError, match="reduces to"):
        Instance(**values)


def test_instance_rejects_wide_symbols():
    with pytest.raises(ValueError):
        Instance(x="aΔ", y="a", p="a", q="b")


def test_instance_accepts_upper_case_names():
    by_alias = Instance(X="cabac", Y="abcac", P="ba", Q="cc")
    assert by_alias == Instance(x="cabac", y="abcac", p="ba", q="cc")
    assert (by_alias.n, by_alias.m, by_alias.s, by_alias.t) == (5, 5, 2, 2)
    assert by_alias.dict(by_alias=True) == {"X": "cabac", "Y": "abcac", "P": "ba", "Q": "cc"}
