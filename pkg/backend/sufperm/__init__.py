"""
sufperm - suffix array 와 연결 순열의 조합론적 특성화
"""
__version__ = "0.1.0"
