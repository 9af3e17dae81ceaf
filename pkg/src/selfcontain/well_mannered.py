"""
Воспитанные свидетели: проверка чередующего автоморфизма, обратный свидетель и вшивание H
"""
from typing import Optional

from ..config import get_config
from ..core.presentation import GraphPresentation
from ..core.subgraph_spec import Image, Union, image_spec
from ..morphisms.expr import Compose
from ..morphisms.verification import VerificationReport, verify_iso_window
from ..morphisms.vertex_map import VertexMap
from ..services.errors import WitnessVerificationError, WorkbenchError
from ..services.logger_service import logger
from .witnesses import RemovableWitness, WellManneredWitness


def verify_alternating(w: WellManneredWitness, n: Optional[int] = None) -> VerificationReport:
    """
    Проверка на окне из n вершин:
    α автоморфизм G; α(H) = f(H) по вершинам окна в обе стороны;
    α²(v) = v на H; α(v) = v вне H ∪ f(H).
    """
    size = n if n is not None else get_config().verify_window
    graph = w.base.graph
    alpha, f, H = w.alpha_map, w.base.f, w.base.H
    f_of_H = Image(f, H)
    subject = f"{w.name}/alternating"

    report = VerificationReport(subject=subject, window_size=size)
    report.merge(verify_iso_window(alpha, graph, graph, size, subject=f"{subject}/automorphism"))

    for v in graph.vertices(size):
        image = alpha.forward(v)
        if H.contains(v):
            if not f_of_H.contains(image):
                report.record("alternation", "alpha(H) outside f(H)", v, image)
            if alpha.forward(image) != v:
                report.record("alternation", "alpha^2 moves H", v, alpha.forward(image))
        elif f_of_H.contains(v):
            # v ∈ f(H) должна быть образом вершины H
            try:
                preimage = alpha.backward(v)
            except WorkbenchError:
                preimage = None
            if preimage is None or not H.contains(preimage):
                report.record("alternation", "f(H) not covered by alpha(H)", v, preimage)
        elif image != v:
            report.record("alternation", "alpha moves a vertex outside H and f(H)", v, image)

    logger.verify(subject, report)
    return report


def reverse_witness(w: WellManneredWitness, n: Optional[int] = None, name: Optional[str] = None) -> RemovableWitness:
    """
    Свидетель f(H) ∈ Rem(G) с отображением g = α ∘ f ∘ α, переводящим f(H) на H.

    Raises:
        WitnessVerificationError: если проверка чередующего автоморфизма не прошла
    """
    report = verify_alternating(w, n)
    if not report.passed:
        raise WitnessVerificationError(f"{w.name}/alternating", report)
    base = w.base
    return RemovableWitness(
        name=name or f"{base.name}-reverse",
        graph=base.graph,
        H=image_spec(base.f, base.H),
        expr=Compose(Compose(w.alpha, base.expr), w.alpha),
        env=base.env,
    )


def sewing_isomorphism(
    w: RemovableWitness,
    alpha: VertexMap,
    n: Optional[int] = None,
) -> VertexMap:
    """
    Для автоморфизма α графа G∖H отображение f⁻¹ ∘ α⁻¹: α(G∖H) -> G
    ("H вшивается" в α(G∖H)), проверенное на окне.

    Raises:
        WitnessVerificationError: если отображение не прошло проверку
    """
    remainder: GraphPresentation = w.remainder
    f = w.f

    def forward(v):
        return f.backward(alpha.backward(v))

    def backward(x):
        return alpha.forward(f.forward(x))

    sewing = VertexMap(
        forward=forward,
        backward=backward,
        source=remainder,
        target=w.graph,
        support=Union((f.support, alpha.support)),
        label=f"inv({f.label})*inv({alpha.label})",
    )
    report = verify_iso_window(sewing, remainder, w.graph, n, subject=f"{w.name}/sewing")
    if not report.passed:
        raise WitnessVerificationError(f"{w.name}/sewing", report)
    logger.success(f"Вшивание {w.name} через {alpha.label} проверено", f"window={report.window_size}")
    return sewing
