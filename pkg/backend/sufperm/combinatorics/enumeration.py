"""
Counting and Enumeration
suffix array 별 단어 수, Eulerian 수 합, P(n,d) 점화식, Aug_s / T_s 생성 절차,
단일 orbit 순열 / Parikh 벡터 / suffix array 스트리밍 열거
"""
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, Iterator, Optional, Tuple

from sufperm.combinatorics.characterize import required_separators, sa_from_linking
from sufperm.combinatorics.linking import LinkingPermutation, reduced_descents
from sufperm.combinatorics.perm import Permutation, is_one_orbit
from sufperm.combinatorics.strings import ParikhVector
from sufperm.core.errors import InvalidLengthError, InvariantViolationError, OutOfRangeError

# 모든 개수는 임의 정밀도 int
BigCount = int


def binomial(m: int, j: int) -> BigCount:
    """C(m, j), j < 0 또는 j > m 이면 0"""
    if j < 0 or m < 0 or j > m:
        return 0
    return comb(m, j)


def _check_alphabet(k: int):
    if k < 1:
        raise OutOfRangeError(f"alphabet size {k} < 1")


def _check_length(n: int):
    if n < 1:
        raise InvalidLengthError(f"invalid length {n}")


def count_words(p: Permutation, k: int) -> BigCount:
    """[1,k]^n 중 suffix array 가 p 인 단어 수: C(n+k-1-|D|, k-1-|D|)"""
    _check_alphabet(k)
    d = len(required_separators(p))
    return binomial(p.n + k - 1 - d, k - 1 - d)


def count_words_full_alphabet(p: Permutation, k: int) -> BigCount:
    """k 개 문자를 모두 사용하는 단어 수: C(n-1-|D|, k-1-|D|)"""
    _check_alphabet(k)
    d = len(required_separators(p))
    return binomial(p.n - 1 - d, k - 1 - d)


def gen_parikh(p: Permutation, k: int) -> Iterator[ParikhVector]:
    """
    p 를 suffix array 로 갖는 단어의 Parikh 벡터 열거

    n 개의 점과 k-1 개의 구분자 배치: 구분자 위치(= prefix sum) 중
    required_separators(p) 는 반드시 포함되고, 나머지는 [0, n] 에서 자유롭게 고름.
    """
    _check_alphabet(k)
    forced = sorted(required_separators(p))
    free = k - 1 - len(forced)
    if free < 0:
        return
    n = p.n
    for extra in combinations_with_replacement(range(n + 1), free):
        cuts = sorted(forced + list(extra))
        bounds = [0] + cuts + [n]
        yield ParikhVector.model_construct(
            counts=tuple(bounds[j + 1] - bounds[j] for j in range(k))
        )


@lru_cache(maxsize=256)
def _p_row(n: int) -> Tuple[BigCount, ...]:
    # P(1,·) = (1,), 이후 P(m,d) = (d+1)P(m-1,d) + (m-d)P(m-1,d-1)
    row = (1,)
    for m in range(2, n + 1):
        prev = row + (0,)
        row = tuple(
            (d + 1) * prev[d] + ((m - d) * prev[d - 1] if d >= 1 else 0)
            for d in range(m)
        )
    return row


def eulerian(n: int, d: int) -> BigCount:
    """
    Eulerian 수 ⟨n d⟩: descent 가 정확히 d 개인 [1,n] 순열 수

    삼각 점화식 ⟨n d⟩ = (d+1)⟨n-1 d⟩ + (n-d)⟨n-1 d-1⟩ 의 캐시된 행에서 읽음
    (P(n,d) 와 같은 점화식).
    """
    _check_length(n)
    if d < 0 or d >= n:
        return 0
    return _p_row(n)[d]


def eulerian_row(n: int) -> Tuple[BigCount, ...]:
    """⟨n 0⟩, …, ⟨n n-1⟩"""
    _check_length(n)
    return _p_row(n)


def p_count(n: int, d: int) -> BigCount:
    """|{φ ∈ S_{n+1}^c : |Des(φ) \\ {1}| = d}|, 점화식으로 계산"""
    _check_length(n)
    if d < 0 or d >= n:
        return 0
    return _p_row(n)[d]


def count_suffix_arrays_by_descents(n: int) -> Dict[int, BigCount]:
    """d ↦ P(n, d) 전체 행"""
    _check_length(n)
    return dict(enumerate(_p_row(n)))


def count_suffix_arrays(n: int, k: int) -> BigCount:
    """크기 k 알파벳 위 길이 n 단어의 서로 다른 suffix array 수: Σ_{d<k} ⟨n d⟩"""
    _check_length(n)
    _check_alphabet(k)
    return sum(eulerian_row(n)[:k])


def aug(s: int, i: int, n: Optional[int] = None) -> int:
    """
    Aug_s(i) = i (i < s), i+1 (i ≥ s)

    Args:
        s: 삽입 위치, 2 ≤ s (n 이 주어지면 s ≤ n+1)
        i: 1 ≤ i (n 이 주어지면 i ≤ n)
    """
    if s < 2 or i < 1 or (n is not None and (s > n + 1 or i > n)):
        raise OutOfRangeError(f"Aug_{s}({i}) outside its domain")
    return i if i < s else i + 1


def aug_inverse(s: int, j: int) -> int:
    """Aug_s^{-1}(j), j ≠ s"""
    if j == s:
        raise OutOfRangeError(f"{s} is not in the image of Aug_{s}")
    return j if j < s else j - 1


def t_transform(f: LinkingPermutation, s: int) -> LinkingPermutation:
    """
    T_s: S_n^c → S_{n+1}^c

    화살표 (1, f(1)) 을 (1, s), (s, Aug_s(f(1))) 로 나누고
    나머지는 Aug_s ∘ f ∘ Aug_s^{-1}.
    """
    n = f.n
    if not 2 <= s <= n + 1:
        raise OutOfRangeError(f"insertion point {s} outside [2, {n + 1}]")
    values = [0] * (n + 1)
    for i in range(2, n + 2):
        if i != s:
            values[i - 1] = aug(s, f(aug_inverse(s, i)))
    values[0] = s
    values[s - 1] = aug(s, f(1))
    result = LinkingPermutation.model_construct(values=tuple(values))
    if not is_one_orbit(result):
        raise InvariantViolationError(f"T_{s}({f}) has several orbits")
    return result


def gen_one_orbit(n: int) -> Iterator[LinkingPermutation]:
    """
    S_n^c 의 모든 원소를 한 번씩 생성 ((n-1)! 개)

    S_1^c = {1} 에서 시작해 T_s 를 재귀 적용; φ 생성 순서, s 오름차순.
    """
    _check_length(n)
    if n == 1:
        yield LinkingPermutation.model_construct(values=(1,))
        return
    for f in gen_one_orbit(n - 1):
        for s in range(2, n + 1):
            yield t_transform(f, s)


def gen_suffix_arrays(n: int, k: int) -> Iterator[Permutation]:
    """[1,k]^n 단어의 suffix array 가 되는 S_n 순열을 한 번씩 생성"""
    _check_length(n)
    _check_alphabet(k)
    for f in gen_one_orbit(n + 1):
        if len(reduced_descents(f)) <= k - 1:
            yield sa_from_linking(f)


def transform_descent_split(f: LinkingPermutation) -> Tuple[int, int]:
    """
    T_s(f) 의 |Des \\ {1}| 변화 집계

    Returns:
        (d 를 유지하는 s 개수, d 를 1 증가시키는 s 개수)
    """
    d = len(reduced_descents(f))
    preserved = incremented = 0
    for s in range(2, f.n + 2):
        after = len(reduced_descents(t_transform(f, s)))
        if after == d:
            preserved += 1
        elif after == d + 1:
            incremented += 1
        else:
            raise InvariantViolationError(f"T_{s}({f}) changed the descent count from {d} to {after}")
    return preserved, incremented
