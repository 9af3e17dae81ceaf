"""
Внутренние заготовки графов и свидетелей для тестов
"""
from typing import Iterator

from src.core import CoordSet, Finite, GraphPresentation, VertexId, remove, vertex
from src.core.constraints import AnyValue
from src.families.extended_star import ROOT, extended_star_graph
from src.families.ray import ray_bundle
from src.morphisms import VertexMap
from src.selfcontain import TorsionCatalogue


def two_disjoint_rays() -> GraphPresentation:
    """Два непересекающихся луча r(n) и s(n), перечисляемые поочерёдно"""
    def adjacency(u: VertexId, v: VertexId) -> bool:
        return u.tag == v.tag and abs(u.coords[0] - v.coords[0]) == 1

    def enumeration() -> Iterator[VertexId]:
        n = 1
        while True:
            yield vertex("r", n)
            yield vertex("s", n)
            n += 1

    return GraphPresentation(
        family_id="two-rays",
        arity={"r": 1, "s": 1},
        membership=lambda v: True,
        adjacency=adjacency,
        enumeration=enumeration,
    )


def torsion_fixture():
    """Луч и каталог без удаляемых подграфов G∖H: r(1) скручена"""
    bundle = ray_bundle()
    witness = bundle.witness("H")
    return witness, TorsionCatalogue(rem_G=[witness], rem_GminusH=[])


def row_flip_without_root():
    """
    Автоморфизм расширенной звезды без o, меняющий строки a(1, c) <-> a(2, c).

    Продолжение тождеством на {o} невозможно: o смежна только с первой строкой.
    """
    G = extended_star_graph()
    S = Finite(frozenset({ROOT}))
    sub = remove(G, S, family_id="extended-star - o")

    def flip(v: VertexId) -> VertexId:
        row, column = v.coords
        return VertexId("a", (3 - row, column))

    m = VertexMap(flip, flip, sub, sub, CoordSet("a", (AnyValue(), AnyValue())), "row-flip")
    return G, S, m


def two_rays_twin():
    """
    Близнецы двух лучей: H = {r(1), r(2)}, P = {r(1)}, f сдвигает луч r на две вершины.

    Луч s не затрагивается, поэтому все G_i несвязны.
    """
    from src.morphisms import MorphismEnv, Named
    from src.selfcontain import RemovableWitness
    from src.services.errors import NotInDomainError
    from src.twins import TwinWitness

    G = two_disjoint_rays()
    H = Finite(frozenset({vertex("r", 1), vertex("r", 2)}))
    P = Finite(frozenset({vertex("r", 1)}))
    target = remove(G, H, family_id="two-rays - H")

    def forward(v: VertexId) -> VertexId:
        return vertex("r", v.coords[0] + 2) if v.tag == "r" else v

    def backward(w: VertexId) -> VertexId:
        if w.tag != "r":
            return w
        if w.coords[0] <= 2:
            raise NotInDomainError(w, "f")
        return vertex("r", w.coords[0] - 2)

    f = VertexMap(forward, backward, G, target, CoordSet("r", (AnyValue(),)), "f")
    witness = RemovableWitness("H", G, H, Named("f"), MorphismEnv(G, {"f": f}))
    return TwinWitness(base=witness, P=P)
