"""
services 모듈
"""
from .verify_service import VerificationFailure, VerificationRunner

__all__ = [
    'VerificationFailure',
    'VerificationRunner',
]
