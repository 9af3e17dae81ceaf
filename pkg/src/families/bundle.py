"""
Комплект данных встроенного семейства: граф, свидетели, чередующие автоморфизмы, близнецы
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, List, Optional

from ..config import get_config
from ..core.presentation import GraphPresentation
from ..core.subgraph_spec import SubgraphSpec
from ..morphisms.evaluator import MorphismEnv
from ..selfcontain.alternating import AlternatingFamily
from ..selfcontain.torsion import TorsionCatalogue
from ..selfcontain.well_mannered import reverse_witness
from ..selfcontain.witnesses import RemovableWitness, WellManneredWitness, transport_witness
from ..services.errors import UnknownNameError
from ..twins.witness import TwinWitness


@dataclass
class FamilyBundle:
    """
    Всё, что известно о встроенном графе.

    notes содержит заявленные аксиомы (например, "P ∉ Rem(G)"): они выводятся
    в отчётах и никогда не используются как доказательство.
    """
    family_id: str
    graph: GraphPresentation
    env: MorphismEnv
    rem: List[RemovableWitness] = field(default_factory=list)
    alt: Optional[AlternatingFamily] = None
    twin: Optional[TwinWitness] = None
    well_mannered: Dict[str, WellManneredWitness] = field(default_factory=dict)
    specs: Dict[str, SubgraphSpec] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    catalogue_fn: Optional[Callable[["FamilyBundle"], TorsionCatalogue]] = None

    def witness(self, name: str) -> RemovableWitness:
        """
        Raises:
            UnknownNameError: нет свидетеля с таким именем
        """
        for w in self.rem:
            if w.name == name:
                return w
        raise UnknownNameError(name, [w.name for w in self.rem], kind="witness")

    def well_mannered_witness(self, name: str) -> WellManneredWitness:
        if name not in self.well_mannered:
            raise UnknownNameError(name, self.well_mannered.keys(), kind="well-mannered witness")
        return self.well_mannered[name]

    def spec(self, name: str) -> SubgraphSpec:
        if name not in self.specs:
            raise UnknownNameError(name, self.specs.keys(), kind="subgraph")
        return self.specs[name]

    @cached_property
    def catalogue(self) -> TorsionCatalogue:
        """Каталог для проверки кручения (строится лениво: нужен обратный свидетель)"""
        if self.catalogue_fn is None:
            return TorsionCatalogue(rem_G=list(self.rem))
        return self.catalogue_fn(self)


def reverse_catalogue(bundle: FamilyBundle, name: str = "H", n: Optional[int] = None) -> TorsionCatalogue:
    """
    Каталог из свидетеля name и его обратного свидетеля; для G∖H те же подграфы,
    перенесённые вдоль f.
    """
    size = n if n is not None else get_config().torsion_scan
    base = bundle.witness(name)
    reverse = reverse_witness(bundle.well_mannered_witness(name), size)
    rem_G = [base, reverse]
    return TorsionCatalogue(rem_G=rem_G, rem_GminusH=[transport_witness(w, base) for w in rem_G])
