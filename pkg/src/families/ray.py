"""
Луч r(1) - r(2) - r(3) - ... как эталонный граф без данных о близнецах
"""
from typing import Iterator

from ..core.constraints import AnyValue, shift
from ..core.presentation import GraphPresentation, remove
from ..core.subgraph_spec import CoordSet, Finite
from ..core.vertex import VertexId
from ..morphisms.evaluator import MorphismEnv
from ..morphisms.expr import Named
from ..morphisms.vertex_map import VertexMap
from ..selfcontain.witnesses import RemovableWitness
from ..services.errors import NotInDomainError
from .bundle import FamilyBundle

FAMILY_ID = "ray"
START = VertexId("r", (1,))


def ray(family_id: str = FAMILY_ID, tag: str = "r") -> GraphPresentation:
    """Путь на натуральных числах"""
    def adjacency(u: VertexId, v: VertexId) -> bool:
        return u.tag == v.tag and abs(u.coords[0] - v.coords[0]) == 1

    def enumeration() -> Iterator[VertexId]:
        n = 1
        while True:
            yield VertexId(tag, (n,))
            n += 1

    return GraphPresentation(
        family_id=family_id,
        arity={tag: 1},
        membership=lambda v: True,
        adjacency=adjacency,
        enumeration=enumeration,
    )


def ray_shift_map(graph: GraphPresentation, target: GraphPresentation) -> VertexMap:
    """r(n) -> r(n + 1): изоморфизм луча на луч без начальной вершины"""
    def forward(v: VertexId) -> VertexId:
        return VertexId(v.tag, (v.coords[0] + 1,))

    def backward(w: VertexId) -> VertexId:
        if w.coords[0] == 1:
            raise NotInDomainError(w, "shift")
        return VertexId(w.tag, (w.coords[0] - 1,))

    def boxes(delta: int):
        def image(box: CoordSet):
            moved = shift(box.constraints[0], delta)
            return None if moved is None else CoordSet(box.tag, (moved,))
        return image

    return VertexMap(
        forward,
        backward,
        graph,
        target,
        CoordSet(START.tag, (AnyValue(),)),
        "shift",
        boxes(1),
        boxes(-1),
    )


def ray_bundle() -> FamilyBundle:
    """Луч с единственным свидетелем: H = {r(1)} удаляется сдвигом"""
    G = ray()
    H = Finite(frozenset({START}))
    f = ray_shift_map(G, remove(G, H, family_id=f"{FAMILY_ID} - H"))
    env = MorphismEnv(G, {"f": f})
    return FamilyBundle(
        family_id=FAMILY_ID,
        graph=G,
        env=env,
        rem=[RemovableWitness("H", G, H, Named("f"), env)],
        specs={"H": H, "start": H},
        notes=["reference fixture: no twin data"],
    )
