"""
Проверка отображений на окнах: биективность, сохранение смежности и несмежности,
обратное отображение и суррогат сюръективности
"""
from typing import Dict, List, Literal, Optional, Sequence

from pydantic import BaseModel, Field

from ..config import get_config
from ..core.presentation import GraphPresentation
from ..core.vertex import VertexId, format_vertex
from ..services.errors import WorkbenchError
from ..services.logger_service import logger
from .vertex_map import VertexMap

VIOLATION_KINDS = (
    "membership",
    "injectivity",
    "inverse",
    "adjacency",
    "non_adjacency",
    "surjectivity",
    "alternation",
)

SURJECTIVITY_NOTE = "surjectivity is an inverse-based proxy on the first n target vertices"


class VerificationReport(BaseModel):
    """Итог проверки на окне; списки нарушений ограничены, полные счётчики в violation_counts"""
    subject: str
    window_size: int
    checked_pairs: int = 0
    membership_violations: List[List[str]] = Field(default_factory=list)
    injectivity_violations: List[List[str]] = Field(default_factory=list)
    inverse_violations: List[List[str]] = Field(default_factory=list)
    adjacency_violations: List[List[str]] = Field(default_factory=list)
    non_adjacency_violations: List[List[str]] = Field(default_factory=list)
    surjectivity_violations: List[List[str]] = Field(default_factory=list)
    alternation_violations: List[List[str]] = Field(default_factory=list)
    violation_counts: Dict[str, int] = Field(default_factory=lambda: {kind: 0 for kind in VIOLATION_KINDS})
    proper_witness: Optional[str] = None
    notes: List[str] = Field(default_factory=list)

    @property
    def total_violations(self) -> int:
        return sum(self.violation_counts.values())

    @property
    def verdict(self) -> Literal["pass", "fail"]:
        return "pass" if self.total_violations == 0 else "fail"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def record(self, kind: str, *witness: object) -> None:
        """Записать нарушение (список свидетелей обрезается по TWINBENCH_VIOLATION_CAP)"""
        self.violation_counts[kind] += 1
        entries: List[List[str]] = getattr(self, f"{kind}_violations")
        if len(entries) < get_config().violation_cap:
            entries.append([_describe(w) for w in witness])

    def merge(self, other: "VerificationReport") -> None:
        """Добавить нарушения другого отчёта"""
        self.checked_pairs += other.checked_pairs
        cap = get_config().violation_cap
        for kind in VIOLATION_KINDS:
            self.violation_counts[kind] += other.violation_counts[kind]
            mine: List[List[str]] = getattr(self, f"{kind}_violations")
            mine.extend(getattr(other, f"{kind}_violations")[: max(0, cap - len(mine))])
        self.notes.extend(note for note in other.notes if note not in self.notes)

    def summary(self) -> Dict[str, object]:
        return {
            "subject": self.subject,
            "verdict": self.verdict,
            "window_size": self.window_size,
            "checked_pairs": self.checked_pairs,
            "total_violations": self.total_violations,
        }


def _describe(value: object) -> str:
    if isinstance(value, tuple) and len(value) == 2 and isinstance(value[0], str):
        return format_vertex(VertexId(value[0], tuple(value[1])))
    return str(value)


def _images(
    m: VertexMap,
    vertices: Sequence[VertexId],
    target: GraphPresentation,
    report: VerificationReport,
) -> List[Optional[VertexId]]:
    """Образы вершин окна; нарушения принадлежности, инъективности и обратного записываются"""
    images: List[Optional[VertexId]] = []
    seen: Dict[VertexId, VertexId] = {}
    for v in vertices:
        try:
            w = m.forward(v)
            inside = target.contains(w)
        except WorkbenchError as exc:
            report.record("membership", v, str(exc))
            images.append(None)
            continue
        if not inside:
            report.record("membership", v, w)
            images.append(None)
            continue
        if w in seen:
            report.record("injectivity", seen[w], v, w)
        else:
            seen[w] = v
        try:
            back = m.backward(w)
        except WorkbenchError as exc:
            report.record("inverse", v, w, str(exc))
        else:
            if back != v:
                report.record("inverse", v, w, back)
        images.append(w)
    return images


def _pairs(
    vertices: Sequence[VertexId],
    images: Sequence[Optional[VertexId]],
    source: GraphPresentation,
    target: GraphPresentation,
    report: VerificationReport,
) -> None:
    """u ~ v ⇔ m(u) ~ m(v) для всех пар окна"""
    for i in range(len(vertices)):
        wi = images[i]
        if wi is None:
            continue
        for j in range(i + 1, len(vertices)):
            wj = images[j]
            if wj is None:
                continue
            report.checked_pairs += 1
            before = source.adjacency(vertices[i], vertices[j])
            after = wi != wj and target.adjacency(wi, wj)
            if before and not after:
                report.record("adjacency", vertices[i], vertices[j])
            elif after and not before:
                report.record("non_adjacency", vertices[i], vertices[j])


def verify_iso_window(
    m: VertexMap,
    G: GraphPresentation,
    H: GraphPresentation,
    n: Optional[int] = None,
    subject: Optional[str] = None,
) -> VerificationReport:
    """
    Проверка, что m ведёт себя как изоморфизм G -> H на окне из n вершин G.

    Сюръективность проверяется через обратное отображение на первых n вершинах H.

    Args:
        m: Проверяемое отображение
        G: Граф-источник
        H: Граф-приёмник
        n: Размер окна (по умолчанию TWINBENCH_WINDOW)
        subject: Имя для отчёта и лога
    """
    size = n if n is not None else get_config().verify_window
    report = VerificationReport(subject=subject or m.label, window_size=size, notes=[SURJECTIVITY_NOTE])
    vertices = G.vertices(size)
    images = _images(m, vertices, H, report)
    _pairs(vertices, images, G, H, report)

    for w in H.vertices(size):
        try:
            v = m.backward(w)
            inside = G.contains(v)
        except WorkbenchError:
            report.record("surjectivity", w)
            continue
        if not inside or m.forward(v) != w:
            report.record("surjectivity", w)

    logger.verify(report.subject, report)
    return report


def verify_embedding_window(
    m: VertexMap,
    G: GraphPresentation,
    H: GraphPresentation,
    n: Optional[int] = None,
    subject: Optional[str] = None,
) -> VerificationReport:
    """
    Проверка индуцированного вложения G -> H на окне и поиск свидетеля собственности:
    первой вершины окна H, не лежащей в образе.
    """
    size = n if n is not None else get_config().embedding_window
    report = VerificationReport(subject=subject or m.label, window_size=size)
    vertices = G.vertices(size)
    images = _images(m, vertices, H, report)
    _pairs(vertices, images, G, H, report)

    for w in H.vertices(size):
        try:
            v = m.backward(w)
            inside = G.contains(v)
        except WorkbenchError:
            inside = False
        if not inside:
            report.proper_witness = format_vertex(w)
            break
    if report.proper_witness is None:
        report.notes.append("no target window vertex outside the image; properness not witnessed")
        report.record("surjectivity", "image covers the target window")

    logger.verify(report.subject, report)
    return report


def maps_equal_on_window(a: VertexMap, b: VertexMap, G: GraphPresentation, n: int) -> Optional[VertexId]:
    """Первая вершина окна, где отображения расходятся, или None"""
    for v in G.vertices(n):
        if a.forward(v) != b.forward(v):
            return v
    return None
