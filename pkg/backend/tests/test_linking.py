"""
linking 모듈 테스트
"""
from itertools import permutations
from math import factorial

import pytest

from sufperm.combinatorics.linking import (
    LinkingPermutation,
    as_linking,
    class_of_linking,
    iterate_from_one,
    phi,
    power_of_one,
    reduced_descents,
    unphi,
)
from sufperm.combinatorics.perm import Permutation, canonical_rep, identity, is_one_orbit, parse_permutation, shift
from sufperm.core.errors import OutOfRangeError


def P(text: str) -> Permutation:
    return parse_permutation(text)


def L(text: str) -> LinkingPermutation:
    return as_linking(parse_permutation(text))


@pytest.mark.parametrize("text,expected", [
    ("5 2 4 1 3", "4 5 1 2 3"),
    ("1 2 3 4", "2 3 4 1"),
    ("6 5 2 4 1 3", "5 1 6 2 3 4"),
    ("1", "1"),
])
def test_phi(text, expected):
    f = phi(P(text))
    assert isinstance(f, LinkingPermutation)
    assert str(f) == expected


@pytest.mark.parametrize("f,first,expected", [
    ("4 5 1 2 3", 5, "5 2 4 1 3"),
    ("2 3 4 1", 1, "1 2 3 4"),
    ("5 1 6 2 3 4", 6, "6 5 2 4 1 3"),
])
def test_unphi(f, first, expected):
    assert str(unphi(L(f), first)) == expected


@pytest.mark.parametrize("first", [0, 6])
def test_unphi_first_out_of_range(first):
    with pytest.raises(OutOfRangeError):
        unphi(L("4 5 1 2 3"), first)


@pytest.mark.parametrize("f,i,expected", [
    ("5 1 6 2 3 4", 1, 5),
    ("5 1 6 2 3 4", 3, 6),
    ("2 3 1", 3, 1),
])
def test_power_of_one(f, i, expected):
    assert power_of_one(L(f), i) == expected


def test_power_of_one_out_of_range():
    with pytest.raises(OutOfRangeError):
        power_of_one(L("2 3 1"), 4)


def test_linking_permutation_rejects_several_orbits():
    with pytest.raises(ValueError):
        LinkingPermutation(values=(2, 1, 4, 3))
    with pytest.raises(ValueError):
        as_linking(identity(3))


def test_linking_permutation_equals_plain_permutation():
    assert L("2 3 1") == P("2 3 1")
    assert hash(L("2 3 1")) == hash(P("2 3 1"))


def test_iterate_from_one_ends_at_one():
    assert list(iterate_from_one(L("5 1 6 2 3 4"))) == [5, 3, 6, 4, 2, 1]


def test_reduced_descents():
    assert reduced_descents(P("5 1 6 2 3 4")) == {3}
    assert reduced_descents(P("4 1 2 3")) == set()


@pytest.mark.parametrize("n", range(1, 7))
def test_phi_constant_on_classes_and_invertible(n):
    for values in permutations(range(1, n + 1)):
        p = Permutation(values=values)
        f = phi(p)
        for k in range(1, n + 1):
            assert phi(shift(p, k)) == f
        assert unphi(f, p(1)) == p
        assert class_of_linking(f) == canonical_rep(p)
        assert len({power_of_one(f, i) for i in range(1, n + 1)}) == n


@pytest.mark.parametrize("n", range(1, 8))
def test_phi_bijective_on_canonical_representatives(n):
    images = set()
    for rest in permutations(range(1, n)):
        f = phi(Permutation(values=(n,) + rest))
        assert is_one_orbit(f)
        images.add(f)
    assert len(images) == factorial(n - 1)
