"""
Скрученные вершины и кручение относительно каталога известных удаляемых подграфов
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from ..config import get_config
from ..core.subgraph_spec import Finite, SubgraphSpec
from ..core.vertex import VertexId
from ..morphisms.verification import VerificationReport
from ..services.errors import FamilyMismatchError, WorkbenchError
from ..services.logger_service import logger
from .witnesses import RemovableWitness, verify_removable


class TwistVerdict(str, Enum):
    """Вердикт для одной вершины"""
    TWISTED = "twisted"
    NOT_TWISTED = "not-twisted"
    UNKNOWN = "unknown"


@dataclass
class TorsionCatalogue:
    """
    Известные свидетели удаляемости для G и для G∖H.

    Квантор "для всех удаляемых подграфов" понимается относительно каталога.
    """
    rem_G: List[RemovableWitness] = field(default_factory=list)
    rem_GminusH: List[RemovableWitness] = field(default_factory=list)

    def verify(self, n: Optional[int] = None) -> List[VerificationReport]:
        """Проверить все записи каталога на окне"""
        return [verify_removable(w, n) for w in (*self.rem_G, *self.rem_GminusH)]


def is_twisted_vertex(v: VertexId, H: RemovableWitness, cat: TorsionCatalogue) -> TwistVerdict:
    """
    Скручена ли вершина v графа G относительно H.

    G∖H отождествляется с G через f = H.f, поэтому для вершины v проверяется f(v):
    вне подвижной части f это сама v. Вершина скручена, если лежит в каком-то P
    каталога rem_G, а f(v) не лежит ни в одном Q каталога rem_GminusH.
    Если v не лежит ни в одном P, ответ unknown.
    """
    G = H.graph
    G.require(v)
    if not any(P.H.contains(v) for P in cat.rem_G):
        return TwistVerdict.UNKNOWN
    try:
        moved = H.f.forward(v)
    except WorkbenchError:
        return TwistVerdict.UNKNOWN
    if any(Q.H.contains(moved) for Q in cat.rem_GminusH):
        return TwistVerdict.NOT_TWISTED
    return TwistVerdict.TWISTED


def torsion(H: RemovableWitness, cat: TorsionCatalogue, scan: Optional[int] = None) -> SubgraphSpec:
    """
    Кручение H среди первых scan вершин G: конечное множество скрученных вершин.

    Raises:
        FamilyMismatchError: каталог rem_G построен над другим графом
    """
    for entry in cat.rem_G:
        if entry.graph.root_id != H.graph.root_id:
            raise FamilyMismatchError(H.graph.root_id, entry.graph.root_id)
    size = scan if scan is not None else get_config().torsion_scan
    if size <= 0:
        return Finite(frozenset())
    twisted = [
        v for v in H.graph.vertices(size)
        if is_twisted_vertex(v, H, cat) is TwistVerdict.TWISTED
    ]
    if twisted:
        logger.warning(f"Кручение {H.name} непусто", f"scan={size}, twisted={len(twisted)}")
    else:
        logger.debug(f"Кручение {H.name} пусто", f"scan={size}")
    return Finite(frozenset(twisted))
