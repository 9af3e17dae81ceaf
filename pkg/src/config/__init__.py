"""Модуль конфигурации."""
from .settings import WorkbenchConfig, get_config, reset_config

__all__ = ["WorkbenchConfig", "get_config", "reset_config"]
