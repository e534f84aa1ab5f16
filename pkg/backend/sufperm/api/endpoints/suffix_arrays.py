"""
Suffix Array API Endpoints
suffix array 구성, 연결 순열, 특성화 판정, 단어 복원, 개수 API
"""
from fastapi import APIRouter, HTTPException, Query, status

from sufperm.combinatorics.characterize import (
    is_suffix_array,
    is_suffix_array_parikh,
    min_alphabet,
    recover_word_sa,
)
from sufperm.combinatorics.enumeration import (
    count_suffix_arrays,
    count_words,
    count_words_full_alphabet,
)
from sufperm.combinatorics.linking import as_linking, phi, unphi
from sufperm.combinatorics.mid_sentinel import (
    is_ascending_to_max,
    is_mid_sentinel_sa,
    is_non_nesting,
)
from sufperm.combinatorics.perm import parse_permutation
from sufperm.combinatorics.strings import (
    SentinelWord,
    bw_array,
    parse_parikh,
    parse_word,
    suffix_array,
    suffix_array_sentinel,
)
from sufperm.core.logging import app_logger as logger
from sufperm.schemas.combinatorics import (
    CharacterizeRequest,
    CharacterizeResponse,
    CountResponse,
    CountWordsRequest,
    MidSentinelResponse,
    PermutationRequest,
    PermutationResponse,
    RecoverRequest,
    UnphiRequest,
    WordRequest,
    WordResponse,
)

router = APIRouter()


def _domain_error(e: ValueError) -> HTTPException:
    logger.warning(f"Rejected request: {e}")
    return HTTPException(
        status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
        detail={
            "success": False,
            "error": {
                "code": 422,
                "message": str(e),
            }
        }
    )


@router.post(
    "/suffix-array",
    response_model=PermutationResponse,
    summary="suffix array 구성",
    description="단어(선택적으로 sentinel 포함)의 suffix array 를 계산합니다.",
)
async def build_suffix_array(request: WordRequest):
    try:
        w = parse_word(request.word, request.alphabet_size)
        if request.sentinel:
            sa = suffix_array_sentinel(SentinelWord(base=w, sentinel_rank=1))
        else:
            sa = suffix_array(w)
        return PermutationResponse(permutation=str(sa))
    except ValueError as e:
        raise _domain_error(e)


@router.post(
    "/bw-array",
    response_model=PermutationResponse,
    summary="BW-array 구성",
    description="primitive 단어의 BW-array 를 계산합니다.",
)
async def build_bw_array(request: WordRequest):
    try:
        return PermutationResponse(permutation=str(bw_array(parse_word(request.word, request.alphabet_size))))
    except ValueError as e:
        raise _domain_error(e)


@router.post("/phi", response_model=PermutationResponse, summary="연결 순열 Φ")
async def linking_permutation(request: PermutationRequest):
    try:
        return PermutationResponse(permutation=str(phi(parse_permutation(request.permutation))))
    except ValueError as e:
        raise _domain_error(e)


@router.post("/unphi", response_model=PermutationResponse, summary="연결 순열로부터 순열 재구성")
async def reconstruct(request: UnphiRequest):
    try:
        f = as_linking(parse_permutation(request.permutation))
        return PermutationResponse(permutation=str(unphi(f, request.first)))
    except ValueError as e:
        raise _domain_error(e)


@router.post(
    "/characterize",
    response_model=CharacterizeResponse,
    summary="suffix array 판정",
    description="알파벳 크기 k 또는 Parikh 벡터 기준으로 suffix array 여부를 판정합니다.",
)
async def characterize(request: CharacterizeRequest):
    try:
        p = parse_permutation(request.permutation)
        if request.parikh is not None:
            verdict = is_suffix_array_parikh(p, parse_parikh(request.parikh))
        else:
            verdict = is_suffix_array(p, request.k)
        return CharacterizeResponse(is_suffix_array=verdict, min_alphabet=min_alphabet(p))
    except ValueError as e:
        raise _domain_error(e)


@router.post("/recover", response_model=WordResponse, summary="유일 단어 복원")
async def recover(request: RecoverRequest):
    try:
        p = parse_permutation(request.permutation)
        return WordResponse(word=str(recover_word_sa(p, parse_parikh(request.parikh))))
    except ValueError as e:
        raise _domain_error(e)


@router.post("/counts/words", response_model=CountResponse, summary="suffix array 별 단어 수")
async def words_count(request: CountWordsRequest):
    try:
        p = parse_permutation(request.permutation)
        counter = count_words_full_alphabet if request.surjective else count_words
        return CountResponse(count=counter(p, request.k))
    except ValueError as e:
        raise _domain_error(e)


@router.get("/counts/arrays", response_model=CountResponse, summary="서로 다른 suffix array 수")
async def arrays_count(n: int = Query(..., ge=1), k: int = Query(..., ge=1)):
    return CountResponse(count=count_suffix_arrays(n, k))


@router.post("/mid-sentinel/check", response_model=MidSentinelResponse, summary="a < ♯ < b suffix array 판정")
async def mid_sentinel_check(request: PermutationRequest):
    try:
        p = parse_permutation(request.permutation)
        return MidSentinelResponse(
            descent=is_mid_sentinel_sa(p),
            ascending_to_max=is_ascending_to_max(p),
            non_nesting=is_non_nesting(p),
        )
    except ValueError as e:
        raise _domain_error(e)
