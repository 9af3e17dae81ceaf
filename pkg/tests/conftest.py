"""
Общие фикстуры: комплекты встроенных семейств строятся один раз на сессию
"""
import pytest

from src.config import reset_config
from src.families import clique_chain, extended_star, ray_bundle


@pytest.fixture(scope="session")
def star():
    return extended_star()


@pytest.fixture(scope="session")
def chain():
    return clique_chain()


@pytest.fixture(scope="session")
def ray_family():
    return ray_bundle()


@pytest.fixture
def env_config(monkeypatch):
    """monkeypatch для переменных окружения; конфигурация перечитывается после теста"""
    reset_config()
    yield monkeypatch
    monkeypatch.undo()
    reset_config()
