"""
Verification Service
모든 특성화 / 개수 결과를 brute-force oracle 과 교차 검증

각 검증 항목은 사례 수를 반환하고, 첫 실패에서 VerificationFailure 를 던집니다.
도메인 오류로 중단된 항목도 실패로 기록하고 나머지 항목은 계속 실행합니다.
"""
import time
from itertools import combinations_with_replacement, permutations, product
from math import factorial
from typing import Callable, Dict, List, Optional

from sufperm.combinatorics.characterize import (
    is_bw_array,
    is_suffix_array,
    is_suffix_array_parikh,
    linking_of_sa,
    min_alphabet,
    recover_word_bw,
    recover_word_sa,
    sa_from_linking,
)
from sufperm.combinatorics.enumeration import (
    count_suffix_arrays,
    count_words,
    count_words_full_alphabet,
    eulerian,
    gen_one_orbit,
    gen_parikh,
    gen_suffix_arrays,
    p_count,
    t_transform,
    transform_descent_split,
)
from sufperm.combinatorics.linking import (
    LinkingPermutation,
    phi,
    power_of_one,
    reduced_descents,
    unphi,
)
from sufperm.combinatorics.mid_sentinel import (
    is_ascending_to_max,
    is_mid_sentinel_sa,
    is_non_nesting,
    mid_sentinel_sa,
    recover_binary_word,
)
from sufperm.combinatorics.oracle import (
    all_words,
    brute_eulerian,
    brute_mid_sentinel_sas,
    brute_one_orbit_census,
    sa_census,
)
from sufperm.combinatorics.perm import (
    Permutation,
    canonical_rep,
    compose,
    equivalent,
    identity,
    inverse,
    is_one_orbit,
    parse_permutation,
    shift,
    wrap,
)
from sufperm.combinatorics.strings import (
    ParikhVector,
    SentinelWord,
    Word,
    append_sentinel_perm,
    bw_array,
    is_primitive,
    parikh,
    parse_word,
    suffix_array,
    suffix_array_sentinel,
)
from sufperm.core.config import settings
from sufperm.core.errors import InvariantViolationError, SufpermError
from sufperm.core.logging import app_logger as logger
from sufperm.schemas.verification import CheckResult, VerificationReport

# S_n 전수 검사 상한 (S_{n+1} 스캔 포함)
EXHAUSTIVE_PERM_LIMIT = 6


class VerificationFailure(Exception):
    """검증 실패"""


def _expect(condition: bool, message: str):
    if not condition:
        raise VerificationFailure(message)


def _all_perms(n: int):
    for values in permutations(range(1, n + 1)):
        yield Permutation.trusted(values)


def _compositions(n: int, k: int):
    """합이 n 인 길이 k 의 모든 비음수 튜플"""
    for cuts in combinations_with_replacement(range(n + 1), k - 1):
        bounds = (0,) + cuts + (n,)
        yield ParikhVector.model_construct(counts=tuple(bounds[j + 1] - bounds[j] for j in range(k)))


class VerificationRunner:
    """
    교차 검증 러너
    - 예제 재현, 불변식, oracle 동치를 규모 (n, k) 까지 전수 확인
    - 항목별 결과와 소요 시간 수집
    """

    def __init__(self, n: int, k: int, workers: Optional[int] = None):
        self.n = n
        self.k = k
        self.workers = workers or settings.VERIFY_WORKERS
        self.checks: Dict[str, Callable[[], int]] = {
            "worked-examples": self.check_worked_examples,
            "permutation-arithmetic": self.check_permutation_arithmetic,
            "linking-permutations": self.check_linking_permutations,
            "sentinel-reduction": self.check_sentinel_reduction,
            "unique-recovery": self.check_unique_recovery,
            "characterization-vs-census": self.check_characterization_vs_census,
            "suffix-array-totals": self.check_suffix_array_totals,
            "eulerian-identity": self.check_eulerian_identity,
            "linking-bijection": self.check_linking_bijection,
            "mid-sentinel-equivalence": self.check_mid_sentinel_equivalence,
            "transform-descent-split": self.check_transform_descent_split,
        }

    def run(self, only: Optional[List[str]] = None) -> VerificationReport:
        """
        검증 실행

        Args:
            only: 실행할 항목 이름 (None 이면 전체)

        Returns:
            VerificationReport
        """
        report = VerificationReport(n=self.n, k=self.k)
        for name, check in self.checks.items():
            if only and name not in only:
                continue
            start = time.time()
            try:
                cases = check()
                result = CheckResult(name=name, passed=True, cases=cases,
                                     elapsed_time=time.time() - start)
                logger.info(f"{name}: {cases} cases passed ({result.elapsed_time:.2f}s)")
            except VerificationFailure as e:
                result = CheckResult(name=name, passed=False,
                                     elapsed_time=time.time() - start, error=str(e))
                logger.error(f"{name}: {e}")
            except (SufpermError, InvariantViolationError) as e:
                result = CheckResult(name=name, passed=False, elapsed_time=time.time() - start,
                                     error=f"{type(e).__name__}: {e}")
                logger.error(f"{name} aborted: {type(e).__name__}: {e}")
            report.checks.append(result)
        return report

    # ── 예제 ──────────────────────────────────────────────────────────────

    def check_worked_examples(self) -> int:
        _expect(str(suffix_array(parse_word("babba"))) == "5 2 4 1 3", "suffix array of babba")
        _expect(str(bw_array(parse_word("bbaba"))) == "3 5 2 4 1", "BW-array of bbaba")
        _expect(str(phi(parse_permutation("5 2 4 1 3"))) == "4 5 1 2 3", "linking permutation of 5 2 4 1 3")
        f = LinkingPermutation(values=(3, 1, 4, 2))
        _expect(str(t_transform(f, 3)) == "3 1 4 5 2", "T_3(3 1 4 2)")
        _expect(count_suffix_arrays(3, 2) == 5 and count_suffix_arrays(3, 3) == 6, "suffix array totals for n=3")
        return 5

    # ── perm / linking ────────────────────────────────────────────────────

    def check_permutation_arithmetic(self) -> int:
        cases = 0
        for m in range(1, min(self.n, 5) + 1):
            ident = identity(m)
            perms = list(_all_perms(m))
            for p in perms:
                _expect(compose(inverse(p), p) == ident == compose(p, inverse(p)), f"inverse of {p}")
                for k1 in range(1, m + 1):
                    _expect(shift(p, k1) == compose(shift(ident, k1), p), f"{p}+{k1} = (ID+{k1}){p}")
                    for k2 in range(1, m + 1):
                        _expect(shift(shift(p, k1), k2) == shift(p, wrap(k1 + k2, m)), f"shift composition on {p}")
                rep = canonical_rep(p)
                _expect(rep(1) == m and equivalent(p, rep), f"canonical representative of {p}")
                for s in perms:
                    _expect(equivalent(p, s) == (rep == canonical_rep(s)) == equivalent(s, p),
                            f"~ relation on {p}, {s}")
                cases += 1
        for m in range(1, min(self.n + 2, 7) + 1):
            one_orbit = sum(1 for p in _all_perms(m) if is_one_orbit(p))
            _expect(one_orbit == factorial(m - 1), f"|S_{m}^c| = {one_orbit}")
            cases += 1
        return cases

    def check_linking_permutations(self) -> int:
        cases = 0
        for m in range(1, min(self.n + 1, EXHAUSTIVE_PERM_LIMIT) + 1):
            images = set()
            for p in _all_perms(m):
                f = phi(p)
                for k in range(1, m + 1):
                    _expect(phi(shift(p, k)) == f, f"Φ not constant on the class of {p}")
                _expect(unphi(f, p(1)) == p, f"unphi round trip for {p}")
                _expect(len({power_of_one(f, i) for i in range(1, m + 1)}) == m, f"orbit of 1 under {f}")
                if p(1) == m:
                    images.add(f)
                cases += 1
            _expect(len(images) == factorial(m - 1), f"Φ on S_{m}/~ hits {len(images)} one-orbit permutations")
        return cases

    # ── strings ───────────────────────────────────────────────────────────

    def check_sentinel_reduction(self) -> int:
        cases = 0
        for m in range(1, self.n + 1):
            for k in range(1, self.k + 1):
                for w in all_words(m, k):
                    sa = suffix_array(w)
                    smallest = SentinelWord(base=w, sentinel_rank=1)
                    _expect(suffix_array_sentinel(smallest) == append_sentinel_perm(sa), f"sentinel form of {w}")
                    for rank in range(1, k + 2):
                        sw = SentinelWord(base=w, sentinel_rank=rank)
                        _expect(suffix_array_sentinel(sw) == bw_array(sw.extended()),
                                f"suffix order = shift order for {sw} (rank {rank})")
                    # 순서 보존 재명명: t 이상 문자를 한 칸 올림
                    for t in range(1, k + 1):
                        relabeled = Word.trusted((r if r < t else r + 1 for r in w.letters), k + 1)
                        _expect(suffix_array(relabeled) == sa, f"relabeling invariance for {w}")
                    if is_primitive(w):
                        bwa = bw_array(w)
                        firsts = [w.letters[j - 1] for j in bwa.values]
                        _expect(firsts == sorted(firsts), f"first column of {w} not sorted")
                    cases += 1
        return cases

    # ── characterize ──────────────────────────────────────────────────────

    def check_unique_recovery(self) -> int:
        cases = 0
        for m in range(1, self.n + 1):
            for k in range(1, self.k + 1):
                for w in all_words(m, k):
                    r = parikh(w)
                    _expect(recover_word_sa(suffix_array(w), r) == w, f"suffix-array recovery of {w}")
                    if is_primitive(w):
                        bwa = bw_array(w)
                        _expect(is_bw_array(bwa, r), f"is_bw_array rejects BW-array of {w}")
                        _expect(recover_word_bw(bwa, r) == w, f"BW-array recovery of {w}")
                    cases += 1
        return cases

    def check_characterization_vs_census(self) -> int:
        cases = 0
        for m in range(1, self.n + 1):
            censuses = {k: sa_census(m, k, workers=self.workers) for k in range(1, self.k + 1)}
            for p in _all_perms(m):
                least = None
                for k, census in censuses.items():
                    member = p in census.groups
                    _expect(is_suffix_array(p, k) == member, f"is_suffix_array({p}, {k})")
                    _expect(count_words(p, k) == census.size(p), f"count_words({p}, {k})")
                    _expect(count_words_full_alphabet(p, k) == census.surjective_size(p),
                            f"count_words_full_alphabet({p}, {k})")
                    vectors = {parikh(w) for w in census.groups.get(p, [])}
                    _expect(len(vectors) == census.size(p), f"two preimages of {p} share a Parikh vector")
                    _expect(set(gen_parikh(p, k)) == vectors, f"gen_parikh({p}, {k})")
                    for r in _compositions(m, k):
                        _expect(is_suffix_array_parikh(p, r) == (r in vectors),
                                f"is_suffix_array_parikh({p}, {r})")
                    if member and least is None:
                        least = k
                    cases += 1
                if least is not None:
                    _expect(min_alphabet(p) == least, f"min_alphabet({p})")
        return cases

    # ── enumeration ───────────────────────────────────────────────────────

    def check_suffix_array_totals(self) -> int:
        cases = 0
        for m in range(1, self.n + 1):
            for k in range(1, self.k + 1):
                keys = sa_census(m, k, workers=self.workers).keys()
                streamed = list(gen_suffix_arrays(m, k))
                _expect(len(streamed) == len(set(streamed)), f"gen_suffix_arrays({m}, {k}) repeats")
                _expect(set(streamed) == keys, f"gen_suffix_arrays({m}, {k}) differs from census")
                _expect(count_suffix_arrays(m, k) == len(keys), f"count_suffix_arrays({m}, {k})")
                cases += 1
        return cases

    def check_eulerian_identity(self) -> int:
        cases = 0
        top = min(self.n + 3, settings.ORACLE_MAX_PERM_N)
        for m in range(1, top + 1):
            _expect(sum(eulerian(m, d) for d in range(m)) == factorial(m), f"Σ⟨{m} d⟩ = {m}!")
            for d in range(m):
                _expect(p_count(m, d) == eulerian(m, d) == brute_eulerian(m, d), f"P({m},{d}) = ⟨{m} {d}⟩")
                cases += 1
        for m in range(1, min(self.n + 2, settings.ORACLE_MAX_PERM_N - 1) + 1):
            census = brute_one_orbit_census(m)
            _expect(census == {d: p_count(m, d) for d in range(m)}, f"one-orbit census of S_{m + 1}^c")
            cases += 1
        return cases

    def check_linking_bijection(self) -> int:
        cases = 0
        for m in range(1, min(self.n, EXHAUSTIVE_PERM_LIMIT) + 1):
            for p in _all_perms(m):
                _expect(sa_from_linking(linking_of_sa(p)) == p, f"bijection round trip for {p}")
                cases += 1
            streamed = list(gen_one_orbit(m + 1))
            _expect(len(set(streamed)) == len(streamed) == factorial(m), f"gen_one_orbit({m + 1})")
            for f in streamed:
                _expect(is_one_orbit(f), f"{f} has several orbits")
                _expect(linking_of_sa(sa_from_linking(f)) == f, f"inverse round trip for {f}")
                cases += 1
            # T_s 단사성: (f, s) 쌍 수 = 상의 크기
            images = {t_transform(f, s) for f in gen_one_orbit(m) for s in range(2, m + 2)}
            _expect(len(images) == factorial(m), f"T_s not injective on S_{m}^c")
        return cases

    def check_mid_sentinel_equivalence(self) -> int:
        cases = 0
        for m in range(1, min(self.n, EXHAUSTIVE_PERM_LIMIT, settings.ORACLE_MAX_BINARY_N) + 1):
            witnesses = brute_mid_sentinel_sas(m)
            for p in _all_perms(m + 1):
                by_descents = is_mid_sentinel_sa(p)
                by_positions = is_ascending_to_max(p) and is_non_nesting(p)
                _expect(by_descents == by_positions == (p in witnesses), f"mid-sentinel predicates on {p}")
                if by_descents:
                    _expect(mid_sentinel_sa(recover_binary_word(p)) == p, f"binary recovery of {p}")
                cases += 1
            for letters in product((1, 2), repeat=m):
                w = Word.trusted(letters, 2)
                sw = SentinelWord(base=w, sentinel_rank=2)
                _expect(mid_sentinel_sa(w) == bw_array(sw.extended()), f"mid-sentinel shift order for {w}")
                cases += 1
        return cases

    def check_transform_descent_split(self) -> int:
        cases = 0
        for m in range(1, min(self.n + 1, EXHAUSTIVE_PERM_LIMIT) + 1):
            for f in gen_one_orbit(m):
                d = len(reduced_descents(f))
                _expect(transform_descent_split(f) == (d + 1, m - 1 - d), f"descent split of T_s({f})")
                cases += 1
        return cases
