"""
Verification Schemas
oracle 교차 검증 결과 스키마
"""
from typing import List, Optional

from pydantic import BaseModel, Field


class CheckResult(BaseModel):
    """단일 검증 항목 결과"""
    name: str = Field(..., description="검증 항목 이름")
    passed: bool = Field(..., description="통과 여부")
    cases: int = Field(0, description="확인한 사례 수")
    elapsed_time: float = Field(0.0, description="소요 시간 (초)")
    error: Optional[str] = Field(None, description="첫 번째 실패 사유")

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name} cases={self.cases} time={self.elapsed_time:.2f}s"
        if self.error:
            line += f" error={self.error}"
        return line


class VerificationReport(BaseModel):
    """전체 검증 보고서"""
    n: int = Field(..., description="최대 단어 길이")
    k: int = Field(..., description="최대 알파벳 크기")
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed_count(self) -> int:
        return sum(1 for check in self.checks if not check.passed)
