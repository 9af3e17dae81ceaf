"""
Свидетели удаляемости: подграф H и отображение f: G -> G∖H
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from ..core.presentation import GraphPresentation, remove
from ..core.subgraph_spec import SubgraphSpec, image_spec
from ..morphisms.evaluator import MorphismEnv
from ..morphisms.expr import Compose, Inverse, MorphismExpr, Named
from ..morphisms.verification import VerificationReport, verify_iso_window
from ..morphisms.vertex_map import VertexMap
from ..services.errors import WitnessVerificationError
from ..services.logger_service import logger


@dataclass
class RemovableWitness:
    """
    Утверждение H ∈ Rem(G) вместе с отображением, которое его подтверждает.

    Отображение задано выражением expr, вычисляемым в окружении env.
    """
    name: str
    graph: GraphPresentation
    H: SubgraphSpec
    expr: MorphismExpr
    env: MorphismEnv

    @property
    def family_id(self) -> str:
        return self.graph.family_id

    @cached_property
    def f(self) -> VertexMap:
        return self.env.evaluate(self.expr)

    @cached_property
    def remainder(self) -> GraphPresentation:
        """G∖H"""
        return remove(self.graph, self.H, family_id=f"{self.graph.family_id} - {self.name}")


@dataclass
class WellManneredWitness:
    """Свидетель удаляемости вместе с чередующим автоморфизмом α: α(H) = f(H), α²(H) = H"""
    base: RemovableWitness
    alpha: MorphismExpr

    @cached_property
    def alpha_map(self) -> VertexMap:
        return self.base.env.evaluate(self.alpha)

    @property
    def name(self) -> str:
        return self.base.name


def verify_removable(w: RemovableWitness, n: Optional[int] = None) -> VerificationReport:
    """Проверка f как изоморфизма G -> G∖H на окне (образ f не пересекает H)"""
    return verify_iso_window(w.f, w.graph, w.remainder, n, subject=w.name)


def require_removable(w: RemovableWitness, n: Optional[int] = None) -> VerificationReport:
    """
    То же, что verify_removable, но неудача превращается в исключение.

    Raises:
        WitnessVerificationError: с отчётом о нарушениях
    """
    report = verify_removable(w, n)
    if not report.passed:
        raise WitnessVerificationError(w.name, report)
    return report


def transport_witness(w: RemovableWitness, along: RemovableWitness, name: Optional[str] = None) -> RemovableWitness:
    """
    Перенос свидетеля P ∈ Rem(G) в G∖H вдоль f = along.f: подграф f(P), отображение f ∘ g ∘ f⁻¹.
    """
    label = name or f"{w.name}@{along.name}"
    env = MorphismEnv(along.remainder, {"f": along.f, "g": w.f}, along.env.family)
    expr = Compose(Compose(Named("f"), Named("g")), Inverse(Named("f")))
    logger.debug(f"Перенос свидетеля {w.name}", f"along={along.name}")
    return RemovableWitness(
        name=label,
        graph=along.remainder,
        H=image_spec(along.f, w.H),
        expr=expr,
        env=env,
    )
