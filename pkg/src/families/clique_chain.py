"""
Цепочка клик: счётное число клик K^j с вершинами k(j, m) и отдельная вершина o.

k(j, m) смежна с k(j, m') (одна клика) и с k(j+1, m) (одна позиция в соседних кликах);
o смежна со всеми вершинами первой клики.
"""
from typing import Callable, Iterator, Optional

from ..core.constraints import AnyValue, AtLeast, Constraint, Equal, InFiniteSet, finite_values, shift
from ..core.presentation import GraphPresentation, remove
from ..core.subgraph_spec import CoordSet, Finite
from ..core.vertex import VertexId
from ..morphisms.evaluator import MorphismEnv
from ..morphisms.expr import Beta, Named
from ..morphisms.vertex_map import VertexMap, identity_map
from ..selfcontain.alternating import (
    AlternatingFamily,
    standard_isomorphism,
    standard_isomorphism_fixing_first,
)
from ..selfcontain.witnesses import RemovableWitness, WellManneredWitness
from ..services.errors import NotInDomainError
from ..services.logger_service import logger
from ..twins.witness import TwinWitness
from .bundle import FamilyBundle, reverse_catalogue

FAMILY_ID = "clique-chain"
ROOT = VertexId("o", ())
NONREMOVABLE_AXIOM = "P = {k(j, 1): j >= 2} is not removable in G (declared, not verified)"


def _adjacent(u: VertexId, v: VertexId) -> bool:
    if u.tag == "o" or v.tag == "o":
        other = v if u.tag == "o" else u
        return other.tag == "k" and other.coords[0] == 1
    (ju, mu), (jv, mv) = u.coords, v.coords
    if ju == jv:
        return mu != mv
    return abs(ju - jv) == 1 and mu == mv


def _enumerate() -> Iterator[VertexId]:
    """o, затем диагонали j + m = s по возрастанию j"""
    yield ROOT
    s = 2
    while True:
        for j in range(1, s):
            yield VertexId("k", (j, s - j))
        s += 1


def clique_chain_graph() -> GraphPresentation:
    """Граф цепочки клик"""
    return GraphPresentation(
        family_id=FAMILY_ID,
        arity={"o": 0, "k": 2},
        membership=lambda v: True,
        adjacency=_adjacent,
        enumeration=_enumerate,
    )


def position_spec(m: int, cliques: Constraint = AnyValue()) -> CoordSet:
    """Вершины позиции m в кликах из cliques"""
    return CoordSet("k", (cliques, Equal(m)))


def _position_map(
    move: Callable[[int], Optional[int]],
    back: Callable[[int], Optional[int]],
    box_move: Callable[[Constraint], Optional[Constraint]],
    box_back: Callable[[Constraint], Optional[Constraint]],
    source: GraphPresentation,
    target: GraphPresentation,
    label: str,
    support,
) -> VertexMap:
    def forward(v: VertexId) -> VertexId:
        if v.tag != "k":
            return v
        j, m = v.coords
        moved = move(m)
        if moved is None:
            raise NotInDomainError(v, label)
        return VertexId("k", (j, moved))

    def backward(w: VertexId) -> VertexId:
        if w.tag != "k":
            return w
        j, m = w.coords
        moved = back(m)
        if moved is None:
            raise NotInDomainError(w, label)
        return VertexId("k", (j, moved))

    def boxes(step: Callable[[Constraint], Optional[Constraint]]):
        def image(box: CoordSet) -> Optional[CoordSet]:
            if box.tag != "k":
                return box
            cliques, positions = box.constraints
            moved = step(positions)
            return None if moved is None else CoordSet("k", (cliques, moved))
        return image

    return VertexMap(forward, backward, source, target, support, label, boxes(box_move), boxes(box_back))


def position_shift_map(graph: GraphPresentation, target: GraphPresentation) -> VertexMap:
    """f: k(j, m) -> k(j, m + 1), o неподвижна"""
    return _position_map(
        lambda m: m + 1,
        lambda m: m - 1 if m > 1 else None,
        lambda c: shift(c, 1),
        lambda c: shift(c, -1),
        graph,
        target,
        "f",
        CoordSet("k", (AnyValue(), AnyValue())),
    )


def position_swap_map(graph: GraphPresentation, i: int) -> VertexMap:
    """α_i: меняет местами позиции 1 и i + 1 во всех кликах; α_0 = id"""
    if i == 0:
        return identity_map(graph)
    a, b = 1, i + 1

    def move(m: int) -> int:
        return b if m == a else (a if m == b else m)

    def box(c: Constraint) -> Optional[Constraint]:
        values = finite_values(c)
        if values is not None:
            moved = frozenset(move(x) for x in values)
            return Equal(next(iter(moved))) if len(moved) == 1 else InFiniteSet(moved)
        if isinstance(c, AnyValue):
            return c
        if isinstance(c, AtLeast):
            if c.bound > b or (c.bound <= a):
                return c
        return None

    support = CoordSet("k", (AnyValue(), InFiniteSet(frozenset({a, b}))))
    return _position_map(move, move, box, box, graph, graph, f"alpha_{i}", support)


def locate_copy(v: VertexId) -> Optional[int]:
    """H_i = позиция i + 1"""
    if v.tag != "k":
        return None
    return v.coords[1] - 1


def clique_chain() -> FamilyBundle:
    """Комплект цепочки клик: сдвиг позиций, перестановки позиций, обыкновенный близнец"""
    G = clique_chain_graph()
    H = position_spec(1)
    P = position_spec(1, AtLeast(2))
    minus_H = remove(G, H, family_id=f"{FAMILY_ID} - H")
    f = position_shift_map(G, minus_H)

    alt = AlternatingFamily(
        name=f"{FAMILY_ID} position swaps",
        graph=G,
        copy_fn=lambda i: position_spec(i + 1),
        alt_fn=lambda i: position_swap_map(G, i),
        support=CoordSet("k", (AnyValue(), AnyValue())),
        locate=locate_copy,
    )
    env = MorphismEnv(
        G,
        {"f": f, "std": standard_isomorphism(alt), "fstar": standard_isomorphism_fixing_first(alt)},
        family=alt,
    )
    w_H = RemovableWitness("H", G, H, Named("f"), env)
    w_std = RemovableWitness("H-std", G, H, Named("std"), env)
    twin = TwinWitness(base=w_H, P=P, declared_nonremovable=True, alternating=alt)

    logger.family("clique_chain", FAMILY_ID)
    return FamilyBundle(
        family_id=FAMILY_ID,
        graph=G,
        env=env,
        rem=[w_H, w_std],
        alt=alt,
        twin=twin,
        well_mannered={"H": WellManneredWitness(w_H, Beta(0, 1))},
        specs={
            "H": H,
            "P": P,
            "Q": twin.Q,
            "fH": position_spec(2),
            "o": Finite(frozenset({ROOT})),
        },
        notes=[NONREMOVABLE_AXIOM],
        catalogue_fn=reverse_catalogue,
    )
