"""
Сужение отображения на подграф и продолжение тождеством
"""
from typing import Optional

from ..config import get_config
from ..core.presentation import GraphPresentation
from ..core.subgraph_spec import SubgraphSpec
from ..core.vertex import VertexId
from ..services.errors import FamilyMismatchError, LiftError, RestrictionError
from ..services.logger_service import logger
from .vertex_map import VertexMap


def restrict(m: VertexMap, sub: GraphPresentation, n: Optional[int] = None) -> VertexMap:
    """
    Сужение m на подграф sub (source = target = sub).

    На окне из n вершин sub проверяется, что образы остаются в sub.

    Raises:
        RestrictionError: образ вершины окна выходит за пределы sub (с вершиной-свидетелем)
    """
    size = n if n is not None else get_config().verify_window
    for v in sub.vertices(size):
        w = m.forward(v)
        if not sub.contains(w):
            raise RestrictionError(v, w, sub.family_id)
    logger.debug(f"Сужение {m.label} на {sub.family_id}", f"window={size}")
    return m.restricted_to(sub)


def lift_by_identity(
    m: VertexMap,
    G: GraphPresentation,
    S: SubgraphSpec,
    n: Optional[int] = None,
) -> VertexMap:
    """
    Продолжение автоморфизма m графа G∖S до отображения G, тождественного на S.

    Продолжение корректно, если для всех s ∈ S и u ∉ S окна выполняется
    s ~ u ⇔ s ~ m(u); проверяются все такие пары окна из n вершин G.

    Raises:
        FamilyMismatchError: m построено не над подграфом G
        LiftError: продолжение ломает смежность (с парой-свидетелем)
    """
    if m.source.root_id != G.root_id:
        raise FamilyMismatchError(G.root_id, m.source.root_id)
    size = n if n is not None else get_config().verify_window
    vertices = G.vertices(size)
    inside = [v for v in vertices if S.contains(v)]
    outside = [v for v in vertices if not S.contains(v)]
    for s in inside:
        for u in outside:
            before = G.adjacency(s, u)
            image = m.forward(u)
            after = image != s and G.adjacency(s, image)
            if before != after:
                reason = "adjacency lost" if before else "adjacency created"
                raise LiftError((s, u), f"{reason}: {u} -> {image}")

    def forward(v: VertexId) -> VertexId:
        return v if S.contains(v) else m.forward(v)

    def backward(w: VertexId) -> VertexId:
        return w if S.contains(w) else m.backward(w)

    logger.debug(f"Продолжение {m.label} тождеством", f"boundary={len(inside)}x{len(outside)}")
    return VertexMap(
        forward=forward,
        backward=backward,
        source=G,
        target=G,
        support=m.support,
        label=f"lift({m.label})",
    )
