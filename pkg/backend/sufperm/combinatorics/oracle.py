"""
Brute-Force Oracle
전수 조사 기반 기준값: 단어 census, 순열 스캔

characterize / enumeration 코드는 호출하지 않습니다
(strings.suffix_array, perm.descents, perm.is_one_orbit 만 사용).
"""
from collections import Counter
from itertools import permutations, product
from multiprocessing import Pool
from typing import Dict, Iterator, List, Optional, Set, Tuple

from pydantic import BaseModel, ConfigDict

from sufperm.combinatorics.perm import Permutation, descents, is_one_orbit
from sufperm.combinatorics.strings import Word, suffix_array
from sufperm.core.config import settings
from sufperm.core.errors import BudgetExceededError, InvalidLengthError, OutOfRangeError
from sufperm.core.logging import app_logger as logger


class SaCensus(BaseModel):
    """suffix array 별 원상 단어 목록"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    k: int
    groups: Dict[Permutation, List[Word]]

    def keys(self) -> Set[Permutation]:
        return set(self.groups)

    def size(self, p: Permutation) -> int:
        return len(self.groups.get(p, []))

    def surjective_size(self, p: Permutation) -> int:
        """k 개 문자를 모두 사용하는 원상 단어 수"""
        return sum(1 for w in self.groups.get(p, []) if len(set(w.letters)) == self.k)

    def total(self) -> int:
        return sum(len(words) for words in self.groups.values())


def _check_word_budget(n: int, k: int, budget: Optional[int]):
    if n < 1:
        raise InvalidLengthError(f"invalid length {n}")
    if k < 1:
        raise OutOfRangeError(f"alphabet size {k} < 1")
    limit = budget if budget is not None else settings.ORACLE_WORD_BUDGET
    if k ** n > limit:
        raise BudgetExceededError(f"{k}^{n} words exceed the oracle budget of {limit}")


def _check_perm_scan(size: int):
    if size < 1:
        raise InvalidLengthError(f"invalid length {size}")
    if size > settings.ORACLE_MAX_PERM_N:
        raise BudgetExceededError(
            f"scanning S_{size} exceeds the oracle cap S_{settings.ORACLE_MAX_PERM_N}"
        )


def all_words(n: int, k: int, budget: Optional[int] = None) -> Iterator[Word]:
    """[1,k]^n 의 모든 단어 (사전순)"""
    _check_word_budget(n, k, budget)
    for letters in product(range(1, k + 1), repeat=n):
        yield Word.trusted(letters, k)


def _census_partition(args: Tuple[int, int, int]) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    # 첫 글자가 first 인 단어들: (suffix array, letters) 쌍
    n, k, first = args
    rows = []
    for rest in product(range(1, k + 1), repeat=n - 1):
        letters = (first,) + rest
        rows.append((suffix_array(Word.trusted(letters, k)).values, letters))
    return rows


def sa_census(n: int, k: int, workers: Optional[int] = None, budget: Optional[int] = None) -> SaCensus:
    """
    모든 단어를 suffix array 로 묶음

    Args:
        n: 단어 길이
        k: 알파벳 크기
        workers: 병렬 프로세스 수 (기본: settings.VERIFY_WORKERS)
        budget: k^n 상한 (기본: settings.ORACLE_WORD_BUDGET)

    Returns:
        SaCensus (각 그룹은 사전순, 작업자 수와 무관하게 동일)
    """
    _check_word_budget(n, k, budget)
    workers = workers or settings.VERIFY_WORKERS
    tasks = [(n, k, first) for first in range(1, k + 1)]

    if workers > 1 and k > 1:
        logger.debug(f"sa_census n={n} k={k}: {len(tasks)} partitions on {workers} workers")
        with Pool(min(workers, len(tasks))) as pool:
            partitions = pool.map(_census_partition, tasks)
    else:
        partitions = [_census_partition(task) for task in tasks]

    groups: Dict[Permutation, List[Word]] = {}
    # 파티션은 첫 글자 순, 파티션 내부는 사전순
    for rows in partitions:
        for sa_values, letters in rows:
            groups.setdefault(Permutation.trusted(sa_values), []).append(Word.trusted(letters, k))

    census = SaCensus.model_construct(n=n, k=k, groups=groups)
    logger.debug(f"sa_census n={n} k={k}: {len(groups)} distinct suffix arrays over {census.total()} words")
    return census


def brute_eulerian(n: int, d: int) -> int:
    """S_n 전수 조사로 descent 가 d 개인 순열 수"""
    _check_perm_scan(n)
    return sum(
        1 for values in permutations(range(1, n + 1))
        if len(descents(Permutation.trusted(values))) == d
    )


def brute_one_orbit_census(n: int) -> Dict[int, int]:
    """S_{n+1}^c 를 |Des(φ) \\ {1}| 로 분류"""
    _check_perm_scan(n + 1)
    buckets: Counter = Counter()
    for values in permutations(range(1, n + 2)):
        f = Permutation.trusted(values)
        if is_one_orbit(f):
            buckets[len(descents(f) - {1})] += 1
    return dict(sorted(buckets.items()))


def brute_mid_sentinel_sas(n: int) -> Set[Permutation]:
    """a < ♯ < b 순서로 {a,b}^n 의 모든 w♯ suffix array 수집"""
    if n < 1:
        raise InvalidLengthError(f"invalid length {n}")
    if n > settings.ORACLE_MAX_BINARY_N:
        raise BudgetExceededError(
            f"binary scan of length {n} exceeds the oracle cap {settings.ORACLE_MAX_BINARY_N}"
        )
    # a → 1, ♯ → 2, b → 3
    result = set()
    for letters in product((1, 3), repeat=n):
        result.add(suffix_array(Word.trusted(letters + (2,), 3)))
    return result
