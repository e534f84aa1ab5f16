"""
도메인 예외 정의

SufpermError 계열은 사용자 입력 오류 (CLI exit 1, HTTP 422),
InvariantViolationError는 내부 불변식 위반 (잡지 않음).
"""


class SufpermError(ValueError):
    """도메인 오류 기본 클래스"""


class InvalidLengthError(SufpermError):
    """길이 n < 1 등 허용되지 않는 크기"""


class LengthMismatchError(SufpermError):
    """두 순열의 길이 불일치"""


class OutOfRangeError(SufpermError):
    """정수 인자가 허용 범위를 벗어남"""


class ParikhMismatchError(SufpermError):
    """Parikh 벡터 합이 순열 길이와 다름"""


class NotPrimitiveError(SufpermError):
    """primitive 하지 않은 단어 (BW-array 정의 불가)"""


class CharacterizationError(SufpermError):
    """특성화 조건 실패로 단어 복원 불가"""


class BudgetExceededError(SufpermError):
    """oracle 전수 조사 상한 초과"""


class InvariantViolationError(RuntimeError):
    """내부 불변식 위반"""
