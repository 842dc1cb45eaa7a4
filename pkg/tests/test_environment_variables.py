import pytest

from src.GENERAL import environment_variables as envmod
from src.GENERAL.constants import Constants as C


@pytest.fixture
def environment(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    for name in ("FOO_ENV", C.ENV_THREADS, C.ENV_PROGRESS):
        monkeypatch.delenv(name, raising=False)
    return envmod.EnvironmentVariables()


def test_get_var_defaults(environment, monkeypatch):
    assert environment.get_var("FOO_ENV", "default") == "default"
    assert environment.get_var("FOO_ENV") == ""
    monkeypatch.setenv("FOO_ENV", "set")
    assert environment.get_var("FOO_ENV", "default") == "set"


def test_dotenv_file_is_read_without_overriding(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / C.VARIABLES_DOTENV_NAME_DEF).write_text(
        f"{C.ENV_THREADS}=5\n{C.ENV_PROGRESS}=yes\n", encoding="utf-8"
    )
    monkeypatch.setenv(C.ENV_PROGRESS, "0")
    ev = envmod.EnvironmentVariables()
    assert ev.get_positive_int(C.ENV_THREADS, 1) == 5
    assert ev.get_flag(C.ENV_PROGRESS) is False


@pytest.mark.parametrize("raw", ["0", "-2", "four", ""])
def test_positive_int_falls_back_to_default(environment, monkeypatch, caplog, raw):
    monkeypatch.setenv(C.ENV_THREADS, raw)
    assert environment.get_positive_int(C.ENV_THREADS, 7) == 7
    assert C.ENV_THREADS in caplog.text


@pytest.mark.parametrize("raw, expected", [("1", True), ("TRUE", True), (" on ", True), ("no", False), ("", False)])
def test_flag(environment, monkeypatch, raw, expected):
    monkeypatch.setenv(C.ENV_PROGRESS, raw)
    assert environment.get_flag(C.ENV_PROGRESS) is expected
