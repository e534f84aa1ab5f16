"""
Suffix Array API Schemas
suffix array / 연결 순열 API 의 Request/Response 스키마
"""
from typing import Optional

from pydantic import BaseModel, Field, model_validator


class WordRequest(BaseModel):
    """단어 입력"""
    word: str = Field(..., description="소문자 ASCII 단어", min_length=1)
    sentinel: bool = Field(False, description="가장 작은 sentinel 을 붙인 형태로 계산")
    alphabet_size: Optional[int] = Field(None, ge=1, description="알파벳 크기 (기본: 사용된 최대 문자)")

    class Config:
        json_schema_extra = {"example": {"word": "babba", "sentinel": False}}


class PermutationRequest(BaseModel):
    """순열 입력"""
    permutation: str = Field(..., description="공백 구분 1-based 값", min_length=1)

    class Config:
        json_schema_extra = {"example": {"permutation": "5 2 4 1 3"}}


class UnphiRequest(PermutationRequest):
    """연결 순열 역재구성 요청"""
    first: int = Field(..., ge=1, description="재구성할 순열의 첫 값")


class CharacterizeRequest(PermutationRequest):
    """suffix array 판정 요청 (k 또는 parikh 중 하나)"""
    k: Optional[int] = Field(None, ge=1, description="알파벳 크기")
    parikh: Optional[str] = Field(None, description="쉼표 구분 Parikh 벡터, 예 '2,3'")

    @model_validator(mode="after")
    def exactly_one_mode(self) -> "CharacterizeRequest":
        if (self.k is None) == (self.parikh is None):
            raise ValueError("give exactly one of k or parikh")
        return self


class RecoverRequest(PermutationRequest):
    """단어 복원 요청"""
    parikh: str = Field(..., description="쉼표 구분 Parikh 벡터")


class CountWordsRequest(PermutationRequest):
    """원상 단어 수 요청"""
    k: int = Field(..., ge=1, description="알파벳 크기")
    surjective: bool = Field(False, description="모든 문자를 사용하는 단어만 셈")


class PermutationResponse(BaseModel):
    success: bool = Field(True, description="성공 여부")
    permutation: str = Field(..., description="공백 구분 1-based 값")


class WordResponse(BaseModel):
    success: bool = Field(True, description="성공 여부")
    word: str = Field(..., description="복원된 단어")


class CharacterizeResponse(BaseModel):
    success: bool = Field(True, description="성공 여부")
    is_suffix_array: bool = Field(..., description="판정 결과")
    min_alphabet: int = Field(..., description="필요한 최소 알파벳 크기")


class CountResponse(BaseModel):
    success: bool = Field(True, description="성공 여부")
    count: int = Field(..., description="정확한 개수")


class MidSentinelResponse(BaseModel):
    success: bool = Field(True, description="성공 여부")
    descent: bool = Field(..., description="descent 조건")
    ascending_to_max: bool = Field(..., description="ascending-to-max 조건")
    non_nesting: bool = Field(..., description="non-nesting 조건")
