"""
로깅 설정

콘솔 로그는 stderr 로만 보냅니다 (stdout 은 CLI 결과 전용).
"""
import sys
from pathlib import Path
from typing import Optional

from loguru import logger

from sufperm.core.config import settings

CONSOLE_FORMAT = (
    "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}"


def error_log_path(log_file: str) -> str:
    """logs/sufperm.log → logs/sufperm_error.log"""
    path = Path(log_file)
    return str(path.with_name(f"{path.stem}_error{path.suffix or '.log'}"))


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None):
    """
    로깅 시스템 초기화 (다시 호출하면 sink 를 새로 구성)

    Args:
        level: 로그 레벨 (기본: settings.LOG_LEVEL)
        log_file: 로그 파일 경로 (기본: settings.LOG_FILE, 빈 문자열이면 파일 로그 없음)

    Returns:
        loguru logger
    """
    level = (level or settings.LOG_LEVEL).upper()
    log_file = settings.LOG_FILE if log_file is None else log_file

    logger.remove()
    logger.add(sys.stderr, colorize=sys.stderr.isatty(), format=CONSOLE_FORMAT, level=level)

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        # 전체 로그 + 에러 전용 로그
        for path, sink_level in ((log_file, level), (error_log_path(log_file), "ERROR")):
            logger.add(
                path,
                rotation=settings.LOG_ROTATION,
                retention=settings.LOG_RETENTION,
                compression="zip",
                format=FILE_FORMAT,
                level=sink_level,
                enqueue=True,
            )

    logger.debug(f"logging ready: level={level} file={log_file or '-'}")
    return logger


# 전역 로거 인스턴스
app_logger = setup_logging()
