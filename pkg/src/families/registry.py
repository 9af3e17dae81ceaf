"""
Реестр встроенных семейств графов.

Комплекты строятся лениво при первом обращении и кэшируются.
"""
from threading import Lock
from typing import Callable, Dict, List, Optional

from ..services.errors import UnknownNameError
from ..services.logger_service import logger
from .bundle import FamilyBundle
from .clique_chain import clique_chain
from .extended_star import extended_star
from .ray import ray_bundle

Builder = Callable[[], FamilyBundle]


class FamilyRegistry:
    """Реестр семейств по имени"""

    def __init__(self):
        """Инициализация реестра встроенными семействами"""
        self._builders: Dict[str, Builder] = {
            "extended-star": extended_star,
            "clique-chain": clique_chain,
            "ray": ray_bundle,
        }
        self._bundles: Dict[str, FamilyBundle] = {}
        self._lock = Lock()

    def names(self) -> List[str]:
        """Имена зарегистрированных семейств"""
        return sorted(self._builders)

    def get(self, name: str) -> FamilyBundle:
        """
        Получить комплект семейства по имени.

        Raises:
            UnknownNameError: семейство не зарегистрировано
        """
        if name not in self._builders:
            raise UnknownNameError(name, self._builders.keys(), kind="family")
        with self._lock:
            if name not in self._bundles:
                logger.family("build", name)
                self._bundles[name] = self._builders[name]()
            return self._bundles[name]

    def describe(self) -> List[Dict[str, object]]:
        """Имена семейств с заявленными аксиомами"""
        return [{"family": name, "axioms": self.get(name).notes} for name in self.names()]


# Глобальный экземпляр реестра
_registry: Optional[FamilyRegistry] = None


def get_registry() -> FamilyRegistry:
    """
    Получить глобальный экземпляр реестра.

    Returns:
        Экземпляр FamilyRegistry
    """
    global _registry
    if _registry is None:
        _registry = FamilyRegistry()
    return _registry
