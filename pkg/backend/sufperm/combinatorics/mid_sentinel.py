"""
Mid-Sentinel Binary Suffix Arrays
이진 알파벳에서 a < ♯ < b 인 경우: descent 판정, ascending-to-max / non-nesting 판정, 단어 복원

♯ 의 중간 순위는 재순위화 (a→1, ♯→2, b→3) 로만 구현합니다.
"""
from sufperm.combinatorics.linking import phi
from sufperm.combinatorics.perm import Permutation, descents, inverse
from sufperm.combinatorics.strings import SentinelWord, Word, suffix_array
from sufperm.core.errors import CharacterizationError, InvalidLengthError, InvariantViolationError, OutOfRangeError

A, B = 1, 2
MID_SENTINEL_RANK = 2


def _require_sentinel_form(p: Permutation):
    if p.n < 2:
        raise InvalidLengthError(f"mid-sentinel predicates need n+1 ≥ 2 points, got {p.n}")


def mid_sentinel_sa(w: Word) -> Permutation:
    """a < ♯ < b 순서에서 w♯ 의 suffix array (길이 n+1)"""
    if any(r > B for r in w.letters):
        raise OutOfRangeError(f"{w} is not a binary word over a, b")
    binary = Word.trusted(w.letters, 2)
    return suffix_array(SentinelWord(base=binary, sentinel_rank=MID_SENTINEL_RANK).extended())


def is_mid_sentinel_sa(p: Permutation) -> bool:
    """Des(Φ(p)) ⊆ {pos-1, pos} ∩ [1, n], pos = p^{-1}(n+1)"""
    _require_sentinel_form(p)
    pos = inverse(p)(p.n)
    allowed = {d for d in (pos - 1, pos) if 1 <= d <= p.n - 1}
    return descents(phi(p)) <= allowed


def is_ascending_to_max(p: Permutation) -> bool:
    """
    모든 i ∈ [1, n-1] 에 대해
    (a) p^{-1}(i), p^{-1}(i+1) 가 모두 p^{-1}(n+1) 앞이면 p^{-1}(i) < p^{-1}(i+1)
    (b) 모두 뒤이면 p^{-1}(i) > p^{-1}(i+1)
    """
    _require_sentinel_form(p)
    inv = inverse(p)
    top = inv(p.n)
    for i in range(1, p.n - 1):
        here, after = inv(i), inv(i + 1)
        if here < top and after < top and not here < after:
            return False
        if here > top and after > top and not here > after:
            return False
    return True


def is_non_nesting(p: Permutation) -> bool:
    """
    i, j ∈ [1, n], p^{-1}(i) < p^{-1}(j) 이고 두 쌍이 같은 방향
    (둘 다 p^{-1}(·) < p^{-1}(·+1) 또는 둘 다 >) 이면 p^{-1}(i+1) < p^{-1}(j+1)
    """
    _require_sentinel_form(p)
    inv = inverse(p)
    n = p.n - 1
    # 방향: 다음 값의 위치가 뒤에 있으면 True
    arcs = [(inv(i), inv(i + 1)) for i in range(1, n + 1)]
    for src_i, dst_i in arcs:
        for src_j, dst_j in arcs:
            if src_i < src_j and (src_i < dst_i) == (src_j < dst_j) and not dst_i < dst_j:
                return False
    return True


def recover_binary_word(p: Permutation) -> Word:
    """
    w_{p(i)} = a (i < pos), b (i > pos) 로 유일한 이진 단어 복원

    Raises:
        CharacterizationError: p 가 mid-sentinel suffix array 가 아님
    """
    if not is_mid_sentinel_sa(p):
        raise CharacterizationError(f"{p} is not a mid-sentinel suffix array")
    pos = inverse(p)(p.n)
    letters = [0] * (p.n - 1)
    for i, start in enumerate(p.values, start=1):
        if i < pos:
            letters[start - 1] = A
        elif i > pos:
            letters[start - 1] = B
    w = Word.trusted(letters, 2)
    if mid_sentinel_sa(w) != p:
        raise InvariantViolationError(f"recovered word {w} does not reproduce {p}")
    return w
