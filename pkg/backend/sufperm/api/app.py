"""
sufperm HTTP 서버
"""
from fastapi import FastAPI

from sufperm.api.endpoints import suffix_arrays
from sufperm.core.config import settings

# API 태그 메타데이터 정의
tags_metadata = [
    {
        "name": "suffix arrays",
        "description": "suffix array / BW-array 구성, 연결 순열, 특성화 판정, 단어 복원, 개수",
    },
]


def create_app() -> FastAPI:
    """FastAPI 애플리케이션 생성"""
    app = FastAPI(
        title=settings.APP_NAME,
        description="suffix array 와 연결 순열의 조합론적 특성화",
        version=settings.APP_VERSION,
        openapi_tags=tags_metadata,
        docs_url="/docs",
        redoc_url="/redoc",
    )

    @app.get("/health")
    def health_check():
        return {
            "success": True,
            "data": {
                "status": "healthy",
                "service": settings.APP_NAME,
                "version": settings.APP_VERSION,
            }
        }

    app.include_router(suffix_arrays.router, prefix=settings.API_PREFIX, tags=["suffix arrays"])
    return app


app = create_app()
