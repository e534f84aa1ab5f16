"""
애플리케이션 설정 관리
"""
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """sufperm 전역 설정"""

    model_config = SettingsConfigDict(
        env_prefix="SUFPERM_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )

    # Application
    APP_NAME: str = "sufperm"
    APP_VERSION: str = "0.1.0"

    # Server
    HOST: str = "127.0.0.1"
    PORT: int = 9090
    API_PREFIX: str = "/api/v1"

    # Logging (stdout is reserved for command output)
    LOG_LEVEL: str = "WARNING"
    LOG_FILE: str = ""
    LOG_ROTATION: str = "50 MB"
    LOG_RETENTION: str = "10 days"

    # Oracle budgets
    ORACLE_WORD_BUDGET: int = Field(10**7, ge=1, description="k^n 상한 (all_words, sa_census)")
    ORACLE_MAX_PERM_N: int = Field(8, ge=1, description="S_n 전수 조사 상한")
    ORACLE_MAX_BINARY_N: int = Field(10, ge=1, description="이진 단어 전수 조사 상한")

    # Verify
    VERIFY_WORKERS: int = Field(1, ge=1, description="census 병렬 프로세스 수")

    @field_validator("LOG_LEVEL")
    @classmethod
    def normalize_level(cls, v: str) -> str:
        """로그 레벨 대문자 정규화"""
        return v.strip().upper()


# 전역 설정 인스턴스
settings = Settings()
