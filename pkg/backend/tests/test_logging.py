"""
로깅 설정 테스트
"""
from sufperm.core.logging import error_log_path, setup_logging


def test_error_log_path():
    assert error_log_path("logs/sufperm.log") == "logs/sufperm_error.log"
    assert error_log_path("run") == "run_error.log"


def test_file_sinks_create_directory(tmp_path):
    log_file = tmp_path / "logs" / "run.log"
    try:
        logger = setup_logging(level="debug", log_file=str(log_file))
        logger.info("census finished")
        logger.complete()
        assert log_file.parent.is_dir()
    finally:
        setup_logging()
