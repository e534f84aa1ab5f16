"""
Words, Suffix Arrays and BW-Arrays
순서 알파벳 위의 단어, 단순 정렬 기반 suffix array / BW-array 구성, primitive 판정, sentinel 변환

문자는 항상 정수 순위 (a=1, b=2, …) 로 보관합니다.
"""
import string
from itertools import accumulate
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from sufperm.combinatorics.perm import Permutation
from sufperm.core.errors import InvalidLengthError, NotPrimitiveError, OutOfRangeError

SENTINEL_CHAR = "#"
ASCII_ALPHABET = string.ascii_lowercase


class Word(BaseModel):
    """알파벳 a_1 < … < a_k 위의 단어 (문자 순위 열)"""

    model_config = ConfigDict(frozen=True)

    letters: tuple[int, ...] = Field(..., min_length=1, description="문자 순위, 각각 [1, k]")
    k: int = Field(..., ge=1, description="알파벳 크기")

    @model_validator(mode="after")
    def check_letters(self) -> "Word":
        for r in self.letters:
            if not 1 <= r <= self.k:
                raise ValueError(f"letter rank {r} outside [1, {self.k}]")
        return self

    @classmethod
    def trusted(cls, letters, k: int) -> "Word":
        return cls.model_construct(letters=tuple(letters), k=k)

    @property
    def n(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)


class SentinelWord(BaseModel):
    """
    w♯: 마지막 위치에 sentinel 이 하나 붙은 단어

    sentinel_rank 는 확장 알파벳에서 ♯ 의 순위:
    1 이면 ♯ < a_1, r 이면 a_{r-1} < ♯ < a_r.
    """

    model_config = ConfigDict(frozen=True)

    base: Word
    sentinel_rank: int = Field(1, ge=1)

    @model_validator(mode="after")
    def check_rank(self) -> "SentinelWord":
        if self.sentinel_rank > self.base.k + 1:
            raise ValueError(f"sentinel rank {self.sentinel_rank} outside [1, {self.base.k + 1}]")
        return self

    def extended(self) -> Word:
        """(n+1) 글자, (k+1) 알파벳 단어로 재순위화"""
        s = self.sentinel_rank
        letters = [r if r < s else r + 1 for r in self.base.letters]
        letters.append(s)
        return Word.trusted(letters, self.base.k + 1)

    def __str__(self) -> str:
        return format_word(self.base) + SENTINEL_CHAR


class ParikhVector(BaseModel):
    """문자별 출현 횟수 (r_1, …, r_k), r_i ≥ 0"""

    model_config = ConfigDict(frozen=True)

    counts: tuple[int, ...] = Field(..., min_length=1)

    @field_validator("counts")
    @classmethod
    def check_non_negative(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if any(r < 0 for r in v):
            raise ValueError(f"negative count in {v}")
        return v

    @property
    def k(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def prefix_sums(self) -> tuple[int, ...]:
        """r_1, r_1+r_2, …, r_1+⋯+r_k"""
        return tuple(accumulate(self.counts))

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.counts)


def parse_word(text: str, alphabet_size: Optional[int] = None) -> Word:
    """
    소문자 ASCII 단어 파싱 ('a' = 1)

    Args:
        text: 예 "babba"
        alphabet_size: 알파벳 크기 (기본: 사용된 가장 큰 문자의 순위)

    Returns:
        Word
    """
    if not text:
        raise InvalidLengthError("empty word")
    letters = []
    for ch in text:
        if ch not in ASCII_ALPHABET:
            raise OutOfRangeError(f"invalid letter {ch!r}; words use lowercase a-z")
        letters.append(ASCII_ALPHABET.index(ch) + 1)
    k = alphabet_size if alphabet_size is not None else max(letters)
    return Word(letters=tuple(letters), k=k)


def parse_sentinel_word(text: str, alphabet_size: Optional[int] = None) -> SentinelWord:
    """'babba#' 형식 (♯ 최소)"""
    if not text.endswith(SENTINEL_CHAR):
        raise OutOfRangeError(f"sentinel word must end with {SENTINEL_CHAR!r}")
    return SentinelWord(base=parse_word(text[:-1], alphabet_size), sentinel_rank=1)


def format_word(w: Word) -> str:
    if max(w.letters) > len(ASCII_ALPHABET):
        raise OutOfRangeError("word uses letters beyond 'z'")
    return "".join(ASCII_ALPHABET[r - 1] for r in w.letters)


def parse_parikh(text: str) -> ParikhVector:
    """'2,3' 형식"""
    try:
        counts = tuple(int(t) for t in text.split(","))
    except ValueError as e:
        raise OutOfRangeError(f"invalid Parikh vector {text!r}") from e
    return ParikhVector(counts=counts)


def suffix_array(w: Word) -> Permutation:
    """
    suffix array: π(i) = i 번째로 작은 suffix 의 시작 위치

    단순 비교 정렬 (prefix 가 확장보다 작음).
    """
    letters = w.letters
    return Permutation.trusted(sorted(range(1, w.n + 1), key=lambda j: letters[j - 1:]))


def is_primitive(w: Word) -> bool:
    """w ≠ v^m (m > 1)"""
    n, letters = w.n, w.letters
    for period in range(1, n // 2 + 1):
        if n % period == 0 and letters == letters[:period] * (n // period):
            return False
    return True


def bw_array(w: Word) -> Permutation:
    """
    BW-array: i 번째로 작은 cyclic shift 의 시작 위치

    Raises:
        NotPrimitiveError: cyclic shift 가 모두 다르지 않은 경우
    """
    if not is_primitive(w):
        raise NotPrimitiveError(f"{format_word(w)} is not primitive; its BW-array is undefined")
    letters = w.letters
    return Permutation.trusted(
        sorted(range(1, w.n + 1), key=lambda j: letters[j - 1:] + letters[:j - 1])
    )


def suffix_array_sentinel(sw: SentinelWord) -> Permutation:
    """w♯ 의 suffix array (길이 n+1, 확장 순서 기준)"""
    return suffix_array(sw.extended())


def append_sentinel_perm(p: Permutation) -> Permutation:
    """σ ↦ (n+1) σ(1) … σ(n)"""
    return Permutation.trusted((p.n + 1,) + p.values)


def strip_sentinel_perm(p: Permutation) -> Permutation:
    """(n+1) σ(1) … σ(n) ↦ σ"""
    if p(1) != p.n:
        raise OutOfRangeError(f"first value {p(1)} is not the maximum {p.n}")
    if p.n < 2:
        raise InvalidLengthError("stripping the sentinel would leave an empty permutation")
    return Permutation.trusted(p.values[1:])


def parikh(w: Word) -> ParikhVector:
    counts = [0] * w.k
    for r in w.letters:
        counts[r - 1] += 1
    return ParikhVector.model_construct(counts=tuple(counts))
