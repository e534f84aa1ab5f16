"""
strings 모듈 테스트
"""
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sufperm.combinatorics.perm import parse_permutation
from sufperm.combinatorics.strings import (
    ParikhVector,
    SentinelWord,
    Word,
    append_sentinel_perm,
    bw_array,
    format_word,
    is_primitive,
    parikh,
    parse_parikh,
    parse_sentinel_word,
    parse_word,
    strip_sentinel_perm,
    suffix_array,
    suffix_array_sentinel,
)
from sufperm.core.errors import InvalidLengthError, NotPrimitiveError, OutOfRangeError

word_strategy = st.integers(1, 5).flatmap(
    lambda k: st.lists(st.integers(1, k), min_size=1, max_size=30).map(
        lambda letters: Word(letters=tuple(letters), k=k)
    )
)


def words(n: int, k: int):
    return [Word.trusted(letters, k) for letters in product(range(1, k + 1), repeat=n)]


@pytest.mark.parametrize("text,expected", [
    ("babba", "5 2 4 1 3"),
    ("aaa", "3 2 1"),
    ("abc", "1 2 3"),
    ("a", "1"),
])
def test_suffix_array(text, expected):
    assert str(suffix_array(parse_word(text))) == expected


@pytest.mark.parametrize("text,expected", [
    ("a", True),
    ("abab", False),
    ("bbaba", True),
    ("aa", False),
    ("abcabc", False),
])
def test_is_primitive(text, expected):
    assert is_primitive(parse_word(text)) is expected


@pytest.mark.parametrize("text,expected", [
    ("bbaba", "3 5 2 4 1"),
    ("a", "1"),
    ("ab", "1 2"),
    ("ba", "2 1"),
])
def test_bw_array(text, expected):
    assert str(bw_array(parse_word(text))) == expected


def test_bw_array_rejects_non_primitive():
    with pytest.raises(NotPrimitiveError):
        bw_array(parse_word("abab"))


def test_suffix_array_sentinel():
    assert str(suffix_array_sentinel(parse_sentinel_word("babba#"))) == "6 5 2 4 1 3"
    assert str(suffix_array_sentinel(parse_sentinel_word("a#"))) == "2 1"
    mid = SentinelWord(base=parse_word("ab"), sentinel_rank=2)
    assert str(suffix_array_sentinel(mid)) == "1 3 2"
    assert str(mid) == "ab#"


def test_sentinel_rank_bounds():
    with pytest.raises(ValueError):
        SentinelWord(base=parse_word("ab"), sentinel_rank=4)
    with pytest.raises(OutOfRangeError):
        parse_sentinel_word("babba")


def test_append_and_strip_sentinel():
    assert str(append_sentinel_perm(parse_permutation("5 2 4 1 3"))) == "6 5 2 4 1 3"
    assert str(strip_sentinel_perm(parse_permutation("6 5 2 4 1 3"))) == "5 2 4 1 3"
    assert str(append_sentinel_perm(parse_permutation("1"))) == "2 1"


def test_strip_sentinel_rejects_bad_input():
    with pytest.raises(OutOfRangeError):
        strip_sentinel_perm(parse_permutation("5 2 4 1 3"))
    with pytest.raises(InvalidLengthError):
        strip_sentinel_perm(parse_permutation("1"))


@pytest.mark.parametrize("text,k,expected", [
    ("babba", None, (2, 3)),
    ("aaa", None, (3,)),
    ("abc", None, (1, 1, 1)),
    ("aab", 4, (2, 1, 0, 0)),
])
def test_parikh(text, k, expected):
    assert parikh(parse_word(text, k)).counts == expected


def test_parikh_vector():
    r = parse_parikh("2,0,3")
    assert r.k == 3
    assert r.total == 5
    assert r.prefix_sums() == (2, 2, 5)
    assert str(r) == "2,0,3"
    with pytest.raises(ValueError):
        ParikhVector(counts=(1, -1))
    with pytest.raises(OutOfRangeError):
        parse_parikh("2,x")


def test_parse_word_errors():
    with pytest.raises(InvalidLengthError):
        parse_word("")
    with pytest.raises(OutOfRangeError):
        parse_word("aB")
    with pytest.raises(OutOfRangeError):
        parse_word("a1")
    with pytest.raises(ValueError):
        parse_word("abc", alphabet_size=2)


def test_format_word():
    assert format_word(parse_word("babba")) == "babba"
    with pytest.raises(OutOfRangeError):
        format_word(Word(letters=(27,), k=27))


@pytest.mark.parametrize("n", range(1, 9))
def test_sentinel_reduction_exhaustive(n):
    for k in (1, 2, 3):
        for w in words(n, k):
            sa = suffix_array(w)
            sentinel = SentinelWord(base=w, sentinel_rank=1)
            assert suffix_array_sentinel(sentinel) == append_sentinel_perm(sa)
            assert bw_array(sentinel.extended()) == append_sentinel_perm(sa)
            assert strip_sentinel_perm(append_sentinel_perm(sa)) == sa


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("n", range(1, 7))
def test_sentinel_at_every_rank_matches_shift_order(n, k):
    for w in words(n, k):
        for rank in range(1, k + 2):
            sentinel = SentinelWord(base=w, sentinel_rank=rank)
            extended = sentinel.extended()
            assert extended.n == n + 1
            assert suffix_array_sentinel(sentinel) == bw_array(extended)


@pytest.mark.parametrize("n", range(1, 7))
def test_suffix_array_invariant_under_relabeling(n):
    for w in words(n, 3):
        spread = Word.trusted([2 * r + 1 for r in w.letters], 7)
        assert suffix_array(spread) == suffix_array(w)


@pytest.mark.parametrize("n", range(1, 7))
def test_bw_first_letters_sorted(n):
    for w in words(n, 3):
        if not is_primitive(w):
            continue
        firsts = [w.letters[j - 1] for j in bw_array(w).values]
        assert firsts == sorted(firsts)


@given(word_strategy)
def test_suffix_array_orders_suffixes(w):
    sa = suffix_array(w)
    assert sorted(sa.values) == list(range(1, w.n + 1))
    suffixes = [w.letters[j - 1:] for j in sa.values]
    assert all(a < b for a, b in zip(suffixes, suffixes[1:]))


@given(word_strategy)
def test_parse_format_round_trip(w):
    assert parse_word(str(w), w.k) == w
