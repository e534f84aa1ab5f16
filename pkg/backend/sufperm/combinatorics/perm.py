"""
Permutation Arithmetic
순열 연산: 합성, 역순열, 순환 값 이동, descent, orbit, ~ 동치

모든 위치와 값은 1-based 입니다.
"""
from typing import List, Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator

from sufperm.core.errors import InvalidLengthError, LengthMismatchError, OutOfRangeError

# Des(π): 정렬 없이 집합으로 보관 (원소는 모두 [1, n-1])
DescentSet = frozenset


def wrap(x: int, n: int) -> int:
    """값을 [1, n] 으로 순환 정규화 (n+1 ≡ 1, 0 ≡ n)"""
    return (x - 1) % n + 1


class Permutation(BaseModel):
    """[1, n] 위의 순열 π = π(1) π(2) … π(n)"""

    model_config = ConfigDict(frozen=True)

    values: tuple[int, ...] = Field(..., min_length=1, description="π(1)..π(n), 1-based")

    @field_validator("values")
    @classmethod
    def check_rearrangement(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        """{1..n} 의 재배열인지 검사 (중복, 0, n 초과 거부)"""
        n = len(v)
        seen = set()
        for x in v:
            if not 1 <= x <= n:
                raise ValueError(f"value {x} outside [1, {n}]")
            if x in seen:
                raise ValueError(f"duplicate value {x}")
            seen.add(x)
        return v

    @classmethod
    def trusted(cls, values: Sequence[int]) -> "Permutation":
        """검증 없이 생성 (내부 연산 결과 전용)"""
        return cls.model_construct(values=tuple(values))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    # 하위 타입(LinkingPermutation)과도 값으로 비교
    def __eq__(self, other: object) -> bool:
        if isinstance(other, Permutation):
            return self.values == other.values
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.values)

    def __str__(self) -> str:
        return format_permutation(self)


def parse_permutation(text: str) -> Permutation:
    """
    공백 구분 1-based 값 한 줄을 순열로 파싱

    Args:
        text: 예 "5 2 4 1 3"

    Returns:
        Permutation
    """
    tokens = text.split()
    if not tokens:
        raise InvalidLengthError("empty permutation")
    try:
        values = tuple(int(t) for t in tokens)
    except ValueError as e:
        raise OutOfRangeError(f"non-integer permutation entry: {e}") from e
    return Permutation(values=values)


def format_permutation(p: Permutation) -> str:
    return " ".join(str(x) for x in p.values)


def _check_same_length(p: Permutation, s: Permutation):
    if p.n != s.n:
        raise LengthMismatchError(f"length mismatch: {p.n} != {s.n}")


def identity(n: int) -> Permutation:
    """항등 순열 1 2 … n"""
    if n < 1:
        raise InvalidLengthError(f"invalid length {n}")
    return Permutation.trusted(range(1, n + 1))


def inverse(p: Permutation) -> Permutation:
    result = [0] * p.n
    for i, v in enumerate(p.values, start=1):
        result[v - 1] = i
    return Permutation.trusted(result)


def compose(p: Permutation, s: Permutation) -> Permutation:
    """(ps)(i) = p(s(i))"""
    _check_same_length(p, s)
    return Permutation.trusted(p.values[v - 1] for v in s.values)


def shift(p: Permutation, k: int) -> Permutation:
    """
    순환 값 이동 (p+k)(i) = p(i)+k

    Args:
        p: 순열
        k: 이동량, 1 ≤ k ≤ n (k = n 이면 p 그대로)

    Returns:
        Permutation
    """
    n = p.n
    if not 1 <= k <= n:
        raise OutOfRangeError(f"shift amount {k} outside [1, {n}]")
    return Permutation.trusted(wrap(v + k, n) for v in p.values)


def descents(p: Permutation) -> DescentSet:
    """Des(p) = {i : p(i) > p(i+1)}"""
    v = p.values
    return frozenset(i for i in range(1, p.n) if v[i - 1] > v[i])


def cycles(p: Permutation) -> List[tuple[int, ...]]:
    """순환 분해 (각 순환은 최소 원소에서 시작)"""
    seen = [False] * (p.n + 1)
    result = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = p(x)
        result.append(tuple(cycle))
    return result


def orbit_count(p: Permutation) -> int:
    return len(cycles(p))


def is_one_orbit(p: Permutation) -> bool:
    """단일 n-순환 여부 (S_n^c 의 원소)"""
    x, steps = p(1), 1
    while x != 1:
        x = p(x)
        steps += 1
    return steps == p.n


def equivalent(p: Permutation, s: Permutation) -> bool:
    """p ~ s  ⇔  ∃k: s = p+k"""
    _check_same_length(p, s)
    # s(1) 이 k 를 결정
    k = wrap(s(1) - p(1), p.n)
    return shift(p, k).values == s.values


def canonical_rep(p: Permutation) -> Permutation:
    """σ(1) = n 인 ~ 동치류의 유일한 대표원"""
    return shift(p, wrap(p.n - p(1), p.n))
