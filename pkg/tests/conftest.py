import os

import pytest

from src.ANALYTIC.scenario import default_scenario
from src.CHANNEL.channel import NO_FADING
from src.MONTECARLO.montecarlo import SimConfig

os.environ["TESTING"] = "1"


@pytest.fixture(autouse=True)
def _no_network(monkeypatch):
    import socket

    def guard(*args, **kwargs):
        raise RuntimeError("Network disabled in tests")

    monkeypatch.setattr(socket, "create_connection", guard, raising=True)
    yield


@pytest.fixture(autouse=True)
def _clean_lorasg_env():
    """Переменные LORASG_* не должны просачиваться между тестами (load_dotenv пишет в os.environ)."""

    def purge():
        for name in [name for name in os.environ if name.startswith("LORASG_")]:
            os.environ.pop(name)

    purge()
    yield
    purge()


@pytest.fixture
def scn():
    """Сельский сценарий по умолчанию: 1000 узлов, Рэлей, пороги nominal."""
    return default_scenario()


@pytest.fixture
def scn_no_fading():
    return default_scenario(fading=NO_FADING)


@pytest.fixture
def mc_cfg():
    return SimConfig(replications=20_000, seed=12345, threads=2, progress=False)
