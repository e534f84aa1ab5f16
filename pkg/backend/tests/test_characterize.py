"""
characterize 모듈 테스트 (oracle census 대조 포함)
"""
from itertools import permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sufperm.combinatorics.characterize import (
    bw_descent_allowance,
    is_bw_array,
    is_suffix_array,
    is_suffix_array_parikh,
    linking_of_sa,
    min_alphabet,
    recover_word_bw,
    recover_word_sa,
    required_separators,
    sa_from_linking,
    sentinel_descent_allowance,
)
from sufperm.combinatorics.linking import LinkingPermutation, as_linking
from sufperm.combinatorics.oracle import sa_census
from sufperm.combinatorics.perm import Permutation, is_one_orbit, parse_permutation
from sufperm.combinatorics.strings import (
    ParikhVector,
    Word,
    bw_array,
    is_primitive,
    parikh,
    parse_parikh,
    suffix_array,
)
from sufperm.core.errors import (
    CharacterizationError,
    InvalidLengthError,
    OutOfRangeError,
    ParikhMismatchError,
)


def P(text: str) -> Permutation:
    return parse_permutation(text)


def R(text: str) -> ParikhVector:
    return parse_parikh(text)


def compositions(n: int, k: int):
    for counts in product(range(n + 1), repeat=k):
        if sum(counts) == n:
            yield ParikhVector(counts=counts)


@pytest.mark.parametrize("p,r,expected", [
    ("3 5 2 4 1", "2,3", True),
    ("1 2 3", "3", False),
    ("2 1", "1,1", True),
    ("2 1", "2", False),
])
def test_is_bw_array(p, r, expected):
    assert is_bw_array(P(p), R(r)) is expected


def test_parikh_sum_mismatch():
    with pytest.raises(ParikhMismatchError):
        is_bw_array(P("2 1"), R("1,2"))
    with pytest.raises(ParikhMismatchError):
        is_suffix_array_parikh(P("2 1"), R("3"))


@pytest.mark.parametrize("p,r,expected", [
    ("3 5 2 4 1", "2,3", "bbaba"),
    ("1", "1", "a"),
    ("2 1", "1,1", "ba"),
])
def test_recover_word_bw(p, r, expected):
    assert str(recover_word_bw(P(p), R(r))) == expected


def test_recover_word_bw_rejects():
    with pytest.raises(CharacterizationError, match="not a BW-array"):
        recover_word_bw(P("1 2 3"), R("3"))


def test_allowances():
    assert bw_descent_allowance(R("2,3")) == {2}
    assert sentinel_descent_allowance(R("2,3")) == {1, 3}
    assert sentinel_descent_allowance(R("5")) == {1}


@pytest.mark.parametrize("p,r,expected", [
    ("5 2 4 1 3", "2,3", True),
    ("5 2 4 1 3", "5,0", False),
    ("3 2 1", "3", True),
    ("1 2 3", "2,1", True),
    ("1 2 3", "3,0", False),
])
def test_is_suffix_array_parikh(p, r, expected):
    assert is_suffix_array_parikh(P(p), R(r)) is expected


@pytest.mark.parametrize("p,k,expected", [
    ("5 2 4 1 3", 2, True),
    ("3 2 1", 1, True),
    ("1 2 3", 1, False),
    ("1 2 3", 2, True),
])
def test_is_suffix_array(p, k, expected):
    assert is_suffix_array(P(p), k) is expected


def test_is_suffix_array_rejects_empty_alphabet():
    with pytest.raises(OutOfRangeError):
        is_suffix_array(P("1 2"), 0)


@pytest.mark.parametrize("p,expected", [("3 2 1", 1), ("5 2 4 1 3", 2), ("1 2 3", 2), ("1", 1)])
def test_min_alphabet(p, expected):
    assert min_alphabet(P(p)) == expected


def test_required_separators():
    assert required_separators(P("5 2 4 1 3")) == {2}
    assert required_separators(P("3 2 1")) == set()


@pytest.mark.parametrize("p,r,expected", [
    ("5 2 4 1 3", "2,3", "babba"),
    ("3 2 1", "3", "aaa"),
    ("1 2 3", "2,1", "aab"),
])
def test_recover_word_sa(p, r, expected):
    assert str(recover_word_sa(P(p), R(r))) == expected


def test_recover_word_sa_rejects():
    with pytest.raises(CharacterizationError, match="no word with Parikh vector"):
        recover_word_sa(P("5 2 4 1 3"), R("5,0"))


@pytest.mark.parametrize("p,expected", [
    ("5 2 4 1 3", "5 1 6 2 3 4"),
    ("1", "2 1"),
    ("1 2 3", "2 3 4 1"),
])
def test_linking_of_sa(p, expected):
    f = linking_of_sa(P(p))
    assert isinstance(f, LinkingPermutation)
    assert str(f) == expected


@pytest.mark.parametrize("f,expected", [
    ("5 1 6 2 3 4", "5 2 4 1 3"),
    ("2 1", "1"),
    ("2 3 4 1", "1 2 3"),
])
def test_sa_from_linking(f, expected):
    assert str(sa_from_linking(as_linking(P(f)))) == expected


def test_sa_from_linking_needs_two_points():
    with pytest.raises(InvalidLengthError):
        sa_from_linking(LinkingPermutation(values=(1,)))


@pytest.mark.parametrize("n", range(1, 6))
def test_characterization_matches_census(n):
    for k in (1, 2, 3):
        census = sa_census(n, k)
        keys = census.keys()
        for values in permutations(range(1, n + 1)):
            p = Permutation.trusted(values)
            assert is_suffix_array(p, k) == (p in keys)
            if p in keys:
                assert min_alphabet(p) <= k
        by_parikh = {}
        for p, group in census.groups.items():
            for w in group:
                by_parikh.setdefault(parikh(w), set()).add(p)
        for r in compositions(n, k):
            expected = by_parikh.get(r, set())
            for values in permutations(range(1, n + 1)):
                p = Permutation.trusted(values)
                assert is_suffix_array_parikh(p, r) == (p in expected)


@pytest.mark.parametrize("n", range(1, 6))
def test_bw_characterization_matches_census(n):
    for k in (1, 2, 3):
        expected = {}
        for letters in product(range(1, k + 1), repeat=n):
            w = Word.trusted(letters, k)
            if is_primitive(w):
                expected.setdefault(parikh(w), set()).add(bw_array(w))
        for r in compositions(n, k):
            for values in permutations(range(1, n + 1)):
                p = Permutation.trusted(values)
                assert is_bw_array(p, r) == (p in expected.get(r, set()))


@pytest.mark.parametrize("n", range(1, 9))
def test_unique_recovery_exhaustive(n):
    for k in (1, 2, 3):
        for letters in product(range(1, k + 1), repeat=n):
            w = Word.trusted(letters, k)
            assert recover_word_sa(suffix_array(w), parikh(w)) == w
            if is_primitive(w):
                assert recover_word_bw(bw_array(w), parikh(w)) == w


@pytest.mark.parametrize("n", range(1, 6))
def test_min_alphabet_matches_fewest_letter_changes(n):
    census = sa_census(n, 3)
    for p, group in census.groups.items():
        changes = []
        for w in group:
            firsts = [w.letters[j - 1] for j in p.values]
            changes.append(1 + sum(1 for a, b in zip(firsts, firsts[1:]) if a < b))
        assert min_alphabet(p) == min(changes)


@pytest.mark.parametrize("n", range(1, 7))
def test_linking_bijection_round_trips(n):
    for values in permutations(range(1, n + 1)):
        p = Permutation.trusted(values)
        assert sa_from_linking(linking_of_sa(p)) == p
    for values in permutations(range(1, n + 2)):
        f = Permutation.trusted(values)
        if is_one_orbit(f):
            linking = as_linking(f)
            assert linking_of_sa(sa_from_linking(linking)) == linking


@given(st.integers(1, 5).flatmap(
    lambda k: st.lists(st.integers(1, k), min_size=1, max_size=30).map(lambda letters: Word(letters=tuple(letters), k=k))
))
def test_recovery_on_random_words(w):
    sa = suffix_array(w)
    assert recover_word_sa(sa, parikh(w)) == w
    assert is_suffix_array(sa, w.k)
    assert min_alphabet(sa) <= len(set(w.letters))
