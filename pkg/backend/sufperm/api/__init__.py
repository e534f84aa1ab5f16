"""
api 모듈
FastAPI 애플리케이션과 엔드포인트
"""
