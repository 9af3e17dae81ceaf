"""
Конечные задания бесконечных графов: принадлежность, смежность и каноническое перечисление
"""
from itertools import islice
from threading import Lock
from typing import Any, Callable, Dict, Iterator, List, Optional

from ..config import get_config
from ..services.errors import MembershipError
from ..services.logger_service import logger
from .subgraph_spec import SubgraphSpec, covers_tags
from .vertex import VertexId

Membership = Callable[[VertexId], bool]
Adjacency = Callable[[VertexId, VertexId], bool]
Enumeration = Callable[[], Iterator[VertexId]]


def as_vertex(value: Any) -> VertexId:
    """Привести пару (tag, coords) к VertexId; координаты могут прийти списком"""
    if isinstance(value, VertexId):
        return value
    tag, coords = value
    return VertexId(tag, tuple(coords))


class GraphPresentation:
    """
    Бесконечный граф, заданный вычислимыми предикатами.

    Предикат membership получает только корректно записанные вершины (тег известен,
    число координат совпадает, координаты натуральные). Предикат adjacency "сырой":
    он вызывается только для вершин графа, проверку делает adjacent().
    """

    def __init__(
        self,
        family_id: str,
        arity: Dict[str, int],
        membership: Membership,
        adjacency: Adjacency,
        enumeration: Enumeration,
        root_id: Optional[str] = None,
        parent: Optional["GraphPresentation"] = None,
        removed: Optional[SubgraphSpec] = None,
    ):
        """
        :param family_id: Идентификатор графа ("extended-star", "clique-chain/G2", ...)
        :param arity: Число координат для каждого тега
        :param membership: Предикат принадлежности для корректных вершин
        :param adjacency: Симметричный иррефлексивный предикат смежности
        :param enumeration: Фабрика итераторов канонического перечисления
        :param root_id: Идентификатор исходного графа, из которого получен данный удалением
        :param parent: Граф, из которого удалено подмножество removed
        :param removed: Удалённое подмножество
        """
        self.family_id = family_id
        self.arity = dict(arity)
        self.root_id = root_id or family_id
        self.parent = parent
        self.removed = removed
        self._membership = membership
        self.adjacency = adjacency
        self._enumeration = enumeration
        self._prefix: List[VertexId] = []
        self._iterator: Optional[Iterator[VertexId]] = None
        self._exhausted = False
        self._lock = Lock()

    def __repr__(self) -> str:
        return f"GraphPresentation({self.family_id!r})"

    def malformed_reason(self, v: Any) -> Optional[str]:
        """Причина, по которой запись вершины некорректна, или None"""
        if not isinstance(v, tuple) or len(v) != 2:
            return "vertex must be a (tag, coords) pair"
        tag, coords = v
        if tag not in self.arity:
            return f"unknown tag '{tag}'"
        if len(coords) != self.arity[tag]:
            return f"tag '{tag}' takes {self.arity[tag]} coordinates, got {len(coords)}"
        if any(not isinstance(c, int) or isinstance(c, bool) or c < 1 for c in coords):
            return "coordinates must be positive integers"
        return None

    def contains(self, v: Any) -> bool:
        """
        Принадлежит ли вершина графу.

        Raises:
            MembershipError: если запись вершины некорректна (тег, арность, координаты)
        """
        reason = self.malformed_reason(v)
        if reason is not None:
            raise MembershipError(v, self.family_id, reason)
        return self._membership(as_vertex(v))

    def require(self, v: Any) -> VertexId:
        """Вершина графа или MembershipError"""
        if not self.contains(v):
            raise MembershipError(v, self.family_id, "not a vertex of the graph")
        return as_vertex(v)

    def adjacent(self, u: Any, v: Any) -> bool:
        """
        Смежность двух вершин графа.

        Raises:
            MembershipError: если одна из вершин не принадлежит графу
        """
        first, second = self.require(u), self.require(v)
        if first == second:
            return False
        return self.adjacency(first, second)

    def _pull(self, n: int) -> None:
        with self._lock:
            if self._iterator is None:
                self._iterator = self._enumeration()
            while not self._exhausted and len(self._prefix) < n:
                chunk = list(islice(self._iterator, n - len(self._prefix)))
                if not chunk:
                    self._exhausted = True
                self._prefix.extend(chunk)

    def vertices(self, n: int) -> List[VertexId]:
        """Первые n вершин канонического перечисления (меньше, если граф конечен)"""
        if len(self._prefix) < n and not self._exhausted:
            self._pull(n)
        return self._prefix[:n]

    def vertex_at(self, index: int) -> Optional[VertexId]:
        """Вершина с номером index (нумерация с нуля) или None для конечного графа"""
        prefix = self.vertices(index + 1)
        return prefix[index] if index < len(prefix) else None

    def iter_vertices(self) -> Iterator[VertexId]:
        """Ленивое перечисление всех вершин"""
        index = 0
        while True:
            v = self.vertex_at(index)
            if v is None:
                return
            yield v
            index += 1


def remove(G: GraphPresentation, S: SubgraphSpec, family_id: Optional[str] = None) -> GraphPresentation:
    """
    Индуцированный подграф G∖S.

    Перечисление = перечисление G без вершин S. Если подряд пропускается больше
    TWINBENCH_REMOVAL_SCAN вершин, перечисление обрывается с предупреждением.

    Args:
        G: Исходный граф
        S: Удаляемое подмножество (вершины вне G игнорируются)
        family_id: Идентификатор результата (по умолчанию "G - S")
    """
    identifier = family_id or f"{G.family_id} - {S}"
    everything = covers_tags(S, G.arity)
    scan_limit = get_config().removal_scan

    def membership(v: VertexId) -> bool:
        return G._membership(v) and not S.contains(v)

    def enumeration() -> Iterator[VertexId]:
        if everything:
            return
        skipped = 0
        for v in G.iter_vertices():
            if S.contains(v):
                skipped += 1
                if skipped > scan_limit:
                    logger.warning(
                        "Перечисление удалённого графа оборвано",
                        f"family={identifier}, skipped={skipped}",
                    )
                    return
                continue
            skipped = 0
            yield v

    logger.family("remove", identifier)
    return GraphPresentation(
        family_id=identifier,
        arity=G.arity,
        membership=membership,
        adjacency=G.adjacency,
        enumeration=enumeration,
        root_id=G.root_id,
        parent=G,
        removed=S,
    )
