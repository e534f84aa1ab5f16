"""
schemas 모듈
"""
from .combinatorics import (
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
from .verification import CheckResult, VerificationReport

__all__ = [
    'CharacterizeRequest',
    'CharacterizeResponse',
    'CountResponse',
    'CountWordsRequest',
    'MidSentinelResponse',
    'PermutationRequest',
    'PermutationResponse',
    'RecoverRequest',
    'UnphiRequest',
    'WordRequest',
    'WordResponse',
    'CheckResult',
    'VerificationReport',
]
