"""
core 모듈
설정, 로깅, 예외
"""
