"""
Characterization of BW-Arrays and Suffix Arrays
descent 조건 기반 판정, 유일 단어 복원, 최소 알파벳 크기, suffix array ↔ 단일 orbit 순열 전단사
"""
from bisect import bisect_left

from sufperm.combinatorics.linking import (
    LinkingPermutation,
    iterate_from_one,
    phi,
    reduced_descents,
)
from sufperm.combinatorics.perm import DescentSet, Permutation, descents, inverse
from sufperm.combinatorics.strings import (
    ParikhVector,
    Word,
    append_sentinel_perm,
    bw_array,
    is_primitive,
    suffix_array,
)
from sufperm.core.errors import (
    CharacterizationError,
    InvalidLengthError,
    InvariantViolationError,
    OutOfRangeError,
    ParikhMismatchError,
)

__all__ = [
    "ParikhVector",
    "bw_descent_allowance",
    "sentinel_descent_allowance",
    "required_separators",
    "is_bw_array",
    "recover_word_bw",
    "is_suffix_array_parikh",
    "is_suffix_array",
    "min_alphabet",
    "recover_word_sa",
    "linking_of_sa",
    "sa_from_linking",
]


def _check_total(p: Permutation, r: ParikhVector):
    if r.total != p.n:
        raise ParikhMismatchError(f"Parikh vector {r} sums to {r.total}, permutation has length {p.n}")


def bw_descent_allowance(r: ParikhVector) -> DescentSet:
    """{r_1, r_1+r_2, …, r_1+⋯+r_{k-1}}"""
    return frozenset(r.prefix_sums()[:-1])


def sentinel_descent_allowance(r: ParikhVector) -> DescentSet:
    """{1, 1+r_1, …, 1+r_1+⋯+r_{k-1}}"""
    return frozenset({1} | {1 + s for s in r.prefix_sums()[:-1]})


def _assign_letters(p: Permutation, r: ParikhVector) -> Word:
    """w[p(i)] = a_j, j 는 i ≤ r_1+⋯+r_j 인 최소 인덱스"""
    bounds = r.prefix_sums()
    letters = [0] * p.n
    for i, pos in enumerate(p.values, start=1):
        letters[pos - 1] = bisect_left(bounds, i) + 1
    return Word.trusted(letters, r.k)


def is_bw_array(p: Permutation, r: ParikhVector) -> bool:
    """p 가 Parikh 벡터 r 을 갖는 primitive 단어의 BW-array 인지"""
    _check_total(p, r)
    if not descents(phi(p)) <= bw_descent_allowance(r):
        return False
    return is_primitive(_assign_letters(p, r))


def recover_word_bw(p: Permutation, r: ParikhVector) -> Word:
    """
    BW-array p 와 Parikh 벡터 r 로부터 유일한 단어 복원

    Raises:
        CharacterizationError: descent 조건 불만족
    """
    _check_total(p, r)
    if not descents(phi(p)) <= bw_descent_allowance(r):
        raise CharacterizationError(f"{p} is not a BW-array for this Parikh vector ({r})")
    w = _assign_letters(p, r)
    if is_primitive(w) and bw_array(w) != p:
        raise InvariantViolationError(f"recovered word {w} does not reproduce BW-array {p}")
    return w


def is_suffix_array_parikh(p: Permutation, r: ParikhVector) -> bool:
    """Des(Φ(p')) ⊆ {1, 1+r_1, …}, p' = (n+1) p(1) … p(n)"""
    _check_total(p, r)
    return descents(linking_of_sa(p)) <= sentinel_descent_allowance(r)


def is_suffix_array(p: Permutation, k: int) -> bool:
    """|Des(Φ(p')) \\ {1}| ≤ k-1"""
    if k < 1:
        raise OutOfRangeError(f"alphabet size {k} < 1")
    return len(reduced_descents(linking_of_sa(p))) <= k - 1


def min_alphabet(p: Permutation) -> int:
    """p 를 suffix array 로 갖는 단어가 존재하는 최소 알파벳 크기"""
    return len(reduced_descents(linking_of_sa(p))) + 1


def required_separators(p: Permutation) -> frozenset:
    """
    p 의 모든 Parikh 벡터가 prefix sum 으로 포함해야 하는 값

    Des(Φ(p')) 의 1 이 아닌 descent i 마다 i-1.
    """
    return frozenset(i - 1 for i in reduced_descents(linking_of_sa(p)))


def recover_word_sa(p: Permutation, r: ParikhVector) -> Word:
    """
    suffix array p 와 Parikh 벡터 r 로부터 유일한 단어 복원

    Raises:
        CharacterizationError: 해당 Parikh 벡터의 단어 중 p 를 suffix array 로 갖는 것이 없음
    """
    if not is_suffix_array_parikh(p, r):
        raise CharacterizationError(
            f"no word with Parikh vector {r} has suffix array {p}"
        )
    w = _assign_letters(p, r)
    if suffix_array(w) != p:
        raise InvariantViolationError(f"recovered word {w} does not reproduce suffix array {p}")
    return w


def linking_of_sa(p: Permutation) -> LinkingPermutation:
    """p ↦ Φ(p'), S_n → S_{n+1}^c"""
    return phi(append_sentinel_perm(p))


def sa_from_linking(f: LinkingPermutation) -> Permutation:
    """
    linking_of_sa 의 역: p^{-1}(i) = φ^i(1) - 1, i ∈ [1, n]

    Args:
        f: n+1 개 점 위의 단일 orbit 순열 (n+1 ≥ 2)

    Returns:
        S_n 의 순열
    """
    if f.n < 2:
        raise InvalidLengthError(f"linking permutation over {f.n} point(s); need at least 2")
    n = f.n - 1
    powers = list(iterate_from_one(f))[:n]
    return inverse(Permutation.trusted(x - 1 for x in powers))
