"""
Конфигурация стенда (окна проверки, пределы сканирования, лимиты)
"""
import os
from typing import Optional

from ..services.logger_service import logger


def _int_from_env(name: str, default: int, minimum: int = 0) -> int:
    """
    Читает целое число из переменной окружения.

    Некорректное значение логируется и заменяется значением по умолчанию.
    """
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.error(f"{name} должен быть числом, получено: {raw}", f"default={default}")
        return default
    if value < minimum:
        logger.error(f"{name} должен быть >= {minimum}, получено: {value}", f"default={default}")
        return default
    return value


class WorkbenchConfig:
    """Конфигурация проверок и построений"""

    # Фиксированные пределы построений
    MAX_POWER = 64
    MAX_TWIN_INDEX = 64
    MAX_COPY_INDEX = 64

    def __init__(self):
        self.verify_window = _int_from_env("TWINBENCH_WINDOW", 500, minimum=1)
        self.torsion_scan = _int_from_env("TWINBENCH_TORSION_SCAN", 200)
        self.embedding_window = _int_from_env("TWINBENCH_EMBEDDING_WINDOW", 300, minimum=1)
        self.disjoint_scan = _int_from_env("TWINBENCH_DISJOINT_SCAN", 10_000, minimum=1)
        self.removal_scan = _int_from_env("TWINBENCH_REMOVAL_SCAN", 1_000_000, minimum=1)
        self.violation_cap = _int_from_env("TWINBENCH_VIOLATION_CAP", 20, minimum=1)

    @property
    def max_power(self) -> int:
        return self.MAX_POWER

    @property
    def max_twin_index(self) -> int:
        return self.MAX_TWIN_INDEX

    @property
    def max_copy_index(self) -> int:
        return self.MAX_COPY_INDEX


# Глобальный экземпляр конфигурации
_config: Optional[WorkbenchConfig] = None


def get_config() -> WorkbenchConfig:
    """
    Получить глобальный экземпляр конфигурации.

    Returns:
        Экземпляр WorkbenchConfig
    """
    global _config
    if _config is None:
        _config = WorkbenchConfig()
    return _config


def reset_config() -> None:
    """Сбросить конфигурацию (перечитать окружение при следующем обращении)"""
    global _config
    _config = None
