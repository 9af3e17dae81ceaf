"""
Фабрика для создания и инициализации сервисов стенда
"""
from src.config import WorkbenchConfig, get_config
from src.families import FamilyRegistry, get_registry


class ServiceFactory:
    """Фабрика с ленивым созданием конфигурации и реестра семейств"""

    def __init__(self):
        self._config = None
        self._registry = None

    def get_config(self) -> WorkbenchConfig:
        """Получить конфигурацию (читается из окружения при первом обращении)"""
        if self._config is None:
            self._config = get_config()
        return self._config

    def get_family_registry(self) -> FamilyRegistry:
        """Получить реестр семейств; конфигурация создаётся раньше реестра"""
        if self._registry is None:
            self.get_config()
            self._registry = get_registry()
        return self._registry


# Глобальный экземпляр фабрики
service_factory = ServiceFactory()


def get_family_registry() -> FamilyRegistry:
    """Получение реестра семейств"""
    return service_factory.get_family_registry()
