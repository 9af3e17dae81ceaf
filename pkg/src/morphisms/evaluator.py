"""
Вычисление выражений над отображениями в окружении именованных отображений
"""
from threading import Lock
from typing import Dict, Optional, Protocol

from ..config import get_config
from ..core.presentation import GraphPresentation
from ..core.vertex import VertexId
from ..services.errors import PowerLimitError, UnknownNameError, WorkbenchError
from .expr import Beta, Compose, Identity, Inverse, MorphismExpr, Named, Power
from .vertex_map import VertexMap, identity_map


class BetaSource(Protocol):
    """Источник отображений β(i, j) (семейство чередующих автоморфизмов)"""

    def beta_map(self, i: int, j: int) -> VertexMap: ...


class MorphismEnv:
    """
    Окружение вычисления: граф, именованные отображения и (необязательно)
    семейство чередующих автоморфизмов для узлов beta(i,j).

    Результаты вычисления кэшируются по выражению.
    """

    def __init__(
        self,
        graph: GraphPresentation,
        names: Optional[Dict[str, VertexMap]] = None,
        family: Optional[BetaSource] = None,
    ):
        self.graph = graph
        self.names = dict(names or {})
        self.family = family
        self._cache: Dict[MorphismExpr, VertexMap] = {}
        self._lock = Lock()

    def with_names(self, **extra: VertexMap) -> "MorphismEnv":
        """Копия окружения с дополнительными именами"""
        names = dict(self.names)
        names.update(extra)
        return MorphismEnv(self.graph, names, self.family)

    def evaluate(self, expr: MorphismExpr) -> VertexMap:
        """
        Построить отображение по выражению.

        Raises:
            UnknownNameError: неизвестное имя отображения
            PowerLimitError: показатель степени по модулю больше допустимого
            FamilyMismatchError: композиция отображений разных графов
        """
        with self._lock:
            cached = self._cache.get(expr)
        if cached is not None:
            return cached
        result = self._build(expr)
        with self._lock:
            self._cache[expr] = result
        return result

    def _build(self, expr: MorphismExpr) -> VertexMap:
        if isinstance(expr, Identity):
            return identity_map(self.graph)
        if isinstance(expr, Named):
            if expr.name not in self.names:
                raise UnknownNameError(expr.name, self.names.keys(), kind="map")
            return self.names[expr.name]
        if isinstance(expr, Beta):
            if self.family is None:
                raise WorkbenchError("beta(i,j) requires an alternating family")
            return self.family.beta_map(expr.i, expr.j)
        if isinstance(expr, Compose):
            return self.evaluate(expr.outer).compose(self.evaluate(expr.inner))
        if isinstance(expr, Power):
            limit = get_config().max_power
            if abs(expr.k) > limit:
                raise PowerLimitError(expr.k, limit)
            return self.evaluate(expr.base).power(expr.k)
        if isinstance(expr, Inverse):
            return self.evaluate(expr.base).inverse()
        raise TypeError(f"unsupported morphism expression: {expr!r}")


def apply(expr: MorphismExpr, v: VertexId, env: MorphismEnv) -> VertexId:
    """
    Образ вершины под выражением.

    Raises:
        MembershipError: если v не лежит в области определения
    """
    return env.evaluate(expr)(v)
