"""
설정 테스트
"""
from sufperm.core.config import Settings


def test_defaults():
    s = Settings()
    assert s.API_PREFIX == "/api/v1"
    assert s.ORACLE_MAX_PERM_N == 8
    assert s.ORACLE_MAX_BINARY_N == 10
    assert s.VERIFY_WORKERS == 1


def test_log_level_normalized():
    assert Settings(LOG_LEVEL=" debug ").LOG_LEVEL == "DEBUG"


def test_environment_override(monkeypatch):
    monkeypatch.setenv("SUFPERM_ORACLE_WORD_BUDGET", "1000")
    monkeypatch.setenv("SUFPERM_VERIFY_WORKERS", "4")
    s = Settings()
    assert s.ORACLE_WORD_BUDGET == 1000
    assert s.VERIFY_WORKERS == 4


def test_manifests_name_python_dotenv():
    import tomllib
    from pathlib import Path

    root = Path(__file__).resolve().parents[2]
    with open(root / "pyproject.toml", "rb") as f:
        deps = tomllib.load(f)["project"]["dependencies"]
    names = [dep.split(">")[0].split("=")[0] for dep in deps]
    assert "python-dotenv" in names
    assert "dotenv" not in names
    requirements = (root / "backend" / "requirements.txt").read_text().split()
    assert any(line.startswith("python-dotenv") for line in requirements)
