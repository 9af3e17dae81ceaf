"""
Свидетели сильных близнецов и семейство G_i = G∖(P ∪ f(P) ∪ ... ∪ f^{i-1}(P))
"""
from dataclasses import dataclass, field
from threading import Lock
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..config import get_config
from ..core.presentation import GraphPresentation, remove
from ..core.subgraph_spec import (
    Difference,
    SubgraphSpec,
    Union,
    from_normal_form,
    image_spec,
    normalize,
    spec_contains,
    spec_disjoint,
)
from ..core.vertex import VertexId
from ..morphisms.vertex_map import VertexMap, identity_map
from ..selfcontain.alternating import AlternatingFamily
from ..selfcontain.witnesses import RemovableWitness
from ..services.errors import (
    CertificateInapplicableError,
    ContainmentError,
    DisjointnessError,
    PowerLimitError,
    WorkbenchError,
)
from ..services.logger_service import logger


@dataclass(frozen=True)
class OrdinaryTag:
    """Q = H∖P конечно: явный список вершин"""
    points: FrozenSet[VertexId]


@dataclass
class TwinFamilyEntry:
    """Член семейства близнецов: G_i и удалённое множество"""
    index: int
    graph: GraphPresentation
    removed: SubgraphSpec
    shift_label: str


@dataclass
class TwinWitness:
    """
    Данные для построения близнецов: свидетель (H, f), неудаляемое P ⊂ H и Q = H∖P.

    declared_nonremovable фиксирует утверждение P ∉ Rem(G) как аксиому семейства;
    оно нигде не используется как доказательство.
    """
    base: RemovableWitness
    P: SubgraphSpec
    declared_nonremovable: bool = True
    alternating: Optional[AlternatingFamily] = None
    Q: SubgraphSpec = field(init=False)
    ordinary: Optional[OrdinaryTag] = field(init=False)
    _entries: Dict[Tuple[int, str], TwinFamilyEntry] = field(default_factory=dict, init=False, repr=False)
    _lock: Lock = field(default_factory=Lock, init=False, repr=False)

    def __post_init__(self):
        self.Q = Difference(self.base.H, self.P)
        self.check()
        nf = normalize(self.Q)
        self.ordinary = OrdinaryTag(nf.points) if nf is not None and nf.is_finite else None

    @property
    def graph(self) -> GraphPresentation:
        return self.base.graph

    def check(self) -> None:
        """
        Raises:
            ContainmentError: P пусто или P ⊄ H
        """
        nf = normalize(self.P)
        if nf is not None and nf.is_empty:
            raise ContainmentError(None, "P must be nonempty")
        verdict = spec_contains(self.P, self.base.H, universe=self.graph)
        if not verdict.holds:
            raise ContainmentError(verdict.witness, "P is not contained in H")

    def q_status(self) -> str:
        """Почему сертификат неприменим: 'Q infinite' или 'Q does not normalize'"""
        nf = normalize(self.Q)
        if nf is None:
            return "Q does not normalize to a finite set"
        return "Q infinite" if not nf.is_finite else "Q finite"

    def require_ordinary(self) -> OrdinaryTag:
        """
        Raises:
            CertificateInapplicableError: Q не конечно
        """
        if self.ordinary is None:
            raise CertificateInapplicableError(self.q_status())
        return self.ordinary


def strong_twin(tw: TwinWitness) -> Tuple[GraphPresentation, VertexMap, VertexMap]:
    """
    Сильный близнец G_1 = G∖P и вложения G_1 -> G (включение) и G -> G_1 (f, образ G∖H ⊆ G_1).

    Raises:
        ContainmentError: P ⊄ H
    """
    tw.check()
    G1 = twin_family(tw, 1).graph
    embed_up = identity_map(G1, target=tw.graph)
    embed_down = tw.base.f.restricted_to(tw.graph, target=G1)
    logger.success(f"Сильный близнец построен для {tw.graph.family_id}", G1.family_id)
    return G1, embed_up, embed_down


def ordinary_twin_witness(tw: TwinWitness) -> VertexMap:
    """
    Для конечного Q: f как изоморфизм G -> G_1∖Q (= G∖H), свидетельство обыкновенного близнеца.

    Raises:
        CertificateInapplicableError: Q не конечно
    """
    tag = tw.require_ordinary()
    G1 = twin_family(tw, 1).graph
    target = remove(G1, tw.Q, family_id=f"{G1.family_id} - Q")
    logger.debug("Обыкновенный близнец", f"|Q|={len(tag.points)}")
    return tw.base.f.restricted_to(tw.graph, target=target)


def twin_family(tw: TwinWitness, i: int, shift: Optional[VertexMap] = None) -> TwinFamilyEntry:
    """
    G_i = G∖⋃_{j<i} shift^j(P); по умолчанию shift = f.

    Raises:
        PowerLimitError: i больше допустимого индекса
        DisjointnessError: сдвиги P пересекаются
    """
    limit = get_config().max_twin_index
    if i < 1:
        raise WorkbenchError(f"twin index must be >= 1, got {i}")
    if i > limit:
        raise PowerLimitError(i, limit)
    mover = shift or tw.base.f
    key = (i, mover.label)
    with tw._lock:
        if key in tw._entries:
            return tw._entries[key]

    pieces: List[SubgraphSpec] = [image_spec(mover.power(j), tw.P) for j in range(i)]
    for a in range(i):
        for b in range(a + 1, i):
            verdict = spec_disjoint(pieces[a], pieces[b], universe=tw.graph)
            if not verdict.holds:
                raise DisjointnessError(verdict.witness, f"{mover.label}^{a}(P) and {mover.label}^{b}(P)")
    removed: SubgraphSpec = pieces[0] if i == 1 else Union(tuple(pieces))
    nf = normalize(removed)
    if nf is not None:
        removed = from_normal_form(nf)

    suffix = "" if shift is None else f"[{mover.label}]"
    graph = remove(tw.graph, removed, family_id=f"{tw.graph.root_id}/G{i}{suffix}")
    entry = TwinFamilyEntry(index=i, graph=graph, removed=removed, shift_label=mover.label)
    with tw._lock:
        tw._entries[key] = entry
    logger.family(f"twin G{i}", tw.graph.root_id)
    return entry
