"""
Linking Permutations
연결 순열 Φ(π) = π^{-1}(π+1) 과 그 역 재구성, φ 거듭제곱
"""
from typing import Iterator

from pydantic import model_validator

from sufperm.combinatorics.perm import (
    DescentSet,
    Permutation,
    compose,
    descents,
    inverse,
    is_one_orbit,
    shift,
    wrap,
)
from sufperm.core.errors import InvariantViolationError, OutOfRangeError


class LinkingPermutation(Permutation):
    """단일 orbit 을 갖는 순열 (S_n^c 의 원소)"""

    @model_validator(mode="after")
    def check_one_orbit(self) -> "LinkingPermutation":
        if not is_one_orbit(self):
            raise ValueError(f"{self.values} does not have exactly one orbit")
        return self


def as_linking(p: Permutation) -> LinkingPermutation:
    """순열을 LinkingPermutation 으로 인증 (단일 orbit 이 아니면 오류)"""
    if isinstance(p, LinkingPermutation):
        return p
    return LinkingPermutation(values=p.values)


def phi(p: Permutation) -> LinkingPermutation:
    """
    연결 순열 Φ(p) = p^{-1} ∘ (p+1)

    Φ(p)(p^{-1}(i)) = p^{-1}(i+1) 이므로 결과는 항상 단일 orbit 입니다.
    """
    f = compose(inverse(p), shift(p, 1))
    if not is_one_orbit(f):
        raise InvariantViolationError(f"linking permutation of {p.values} has several orbits")
    return LinkingPermutation.model_construct(values=f.values)


def unphi(f: LinkingPermutation, first: int) -> Permutation:
    """
    Φ(p) 와 p(1) 로부터 p 재구성: p(f(i)) = p(i)+1

    Args:
        f: 연결 순열
        first: p(1), 1 ≤ first ≤ n

    Returns:
        Φ(p) = f, p(1) = first 인 유일한 순열
    """
    n = f.n
    if not 1 <= first <= n:
        raise OutOfRangeError(f"first value {first} outside [1, {n}]")
    result = [0] * n
    i, value = 1, first
    for _ in range(n):
        result[i - 1] = value
        i, value = f(i), wrap(value + 1, n)
    return Permutation.trusted(result)


def iterate_from_one(f: LinkingPermutation) -> Iterator[int]:
    """φ(1), φ²(1), …, φ^n(1) = 1 순서로 생성"""
    x = 1
    for _ in range(f.n):
        x = f(x)
        yield x


def power_of_one(f: LinkingPermutation, i: int) -> int:
    """φ^i(1)"""
    if not 1 <= i <= f.n:
        raise OutOfRangeError(f"power {i} outside [1, {f.n}]")
    x = 1
    for _ in range(i):
        x = f(x)
    return x


def reduced_descents(f: Permutation) -> DescentSet:
    """Des(f) \\ {1}"""
    return descents(f) - {1}


def class_of_linking(f: LinkingPermutation) -> Permutation:
    """Φ 의 S_n/~ 위 역함수: σ(1) = n 인 대표원 반환"""
    return unphi(f, f.n)
