"""
Операции над свидетелями: непересекающиеся копии, объединение и разделение удаляемых подграфов
"""
from typing import List, Optional

from ..config import get_config
from ..core.subgraph_spec import Difference, SubgraphSpec, Union, image_spec, normalize, spec_disjoint
from ..morphisms.evaluator import MorphismEnv
from ..morphisms.expr import Compose, Inverse, Named
from ..services.errors import DisjointnessError, FamilyMismatchError, PowerLimitError
from ..services.logger_service import logger
from .witnesses import RemovableWitness, require_removable


def disjoint_copies(w: RemovableWitness, k: int) -> List[SubgraphSpec]:
    """
    Копии f^j(H), j = 0..k-1, с проверкой попарной непересекаемости.

    Raises:
        PowerLimitError: k больше допустимого числа копий
        DisjointnessError: две копии пересекаются (с вершиной-свидетелем)
    """
    limit = get_config().max_copy_index
    if k > limit:
        raise PowerLimitError(k, limit)
    f = w.f
    copies = [image_spec(f.power(j), w.H) for j in range(k)]
    for a in range(k):
        for b in range(a + 1, k):
            verdict = spec_disjoint(copies[a], copies[b], universe=w.graph)
            if not verdict.holds:
                raise DisjointnessError(verdict.witness, f"{w.name}: copies f^{a}(H) and f^{b}(H)")
            if not verdict.exact:
                logger.warning(
                    f"Непересекаемость f^{a}(H) и f^{b}(H) проверена только по окну",
                    f"scan={verdict.scan_bound}",
                )
    logger.debug(f"Построено {k} копий {w.name}")
    return copies


def _is_empty(spec: SubgraphSpec) -> bool:
    nf = normalize(spec)
    return nf is not None and nf.is_empty


def compose_removable(
    wP: RemovableWitness,
    wQ: RemovableWitness,
    n: Optional[int] = None,
    name: Optional[str] = None,
) -> RemovableWitness:
    """
    Из P ∈ Rem(G) и Q ∈ Rem(G∖P) получить P ∪ Q ∈ Rem(G) с отображением wQ.f ∘ wP.f.

    Args:
        wP: Свидетель для P над G
        wQ: Свидетель для Q над G∖P
        n: Если задан, результат проверяется на окне этого размера

    Raises:
        FamilyMismatchError: wQ построен не над G∖P
        WitnessVerificationError: результат не прошёл проверку на окне
    """
    parent = wQ.graph.parent
    if parent is None or parent.family_id != wP.graph.family_id or wQ.graph.removed != wP.H:
        raise FamilyMismatchError(f"{wP.graph.family_id} - {wP.H}", wQ.graph.family_id)
    if _is_empty(wQ.H):
        return wP
    env = MorphismEnv(wP.graph, {"p": wP.f, "q": wQ.f}, wP.env.family)
    witness = RemovableWitness(
        name=name or f"{wP.name}+{wQ.name}",
        graph=wP.graph,
        H=Union((wP.H, wQ.H)),
        expr=Compose(Named("q"), Named("p")),
        env=env,
    )
    if n is not None:
        require_removable(witness, n)
    return witness


def split_removable(
    w_union: RemovableWitness,
    wP: RemovableWitness,
    n: Optional[int] = None,
    name: Optional[str] = None,
) -> RemovableWitness:
    """
    Обратное направление для заявленных свидетелей: по P ∪ Q ∈ Rem(G) и P ∈ Rem(G)
    отображение (w_union.f) ∘ (wP.f)⁻¹ подтверждает Q = (P ∪ Q)∖P ∈ Rem(G∖P).

    Raises:
        FamilyMismatchError: свидетели построены над разными графами
        WitnessVerificationError: результат не прошёл проверку на окне
    """
    if w_union.graph.family_id != wP.graph.family_id:
        raise FamilyMismatchError(wP.graph.family_id, w_union.graph.family_id)
    env = MorphismEnv(wP.remainder, {"u": w_union.f, "p": wP.f}, wP.env.family)
    witness = RemovableWitness(
        name=name or f"{w_union.name}-{wP.name}",
        graph=wP.remainder,
        H=Difference(w_union.H, wP.H),
        expr=Compose(Named("u"), Inverse(Named("p"))),
        env=env,
    )
    if n is not None:
        require_removable(witness, n)
    return witness
