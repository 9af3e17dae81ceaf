"""
Семейства чередующих автоморфизмов, перестановки β(i, j) и стандартные изоморфизмы
"""
from dataclasses import dataclass, field
from threading import Lock
from typing import Callable, Dict, List, Optional

from ..config import get_config
from ..core.presentation import GraphPresentation, remove
from ..core.subgraph_spec import (
    CoordSet,
    Difference,
    SubgraphSpec,
    Union,
    spec_contains,
    spec_disjoint,
)
from ..core.vertex import VertexId
from ..morphisms.verification import VerificationReport, verify_iso_window
from ..morphisms.vertex_map import VertexMap
from ..services.errors import DisjointnessError, NotInDomainError, WorkbenchError
from ..services.logger_service import logger

Locator = Callable[[VertexId], Optional[int]]


@dataclass
class AlternatingFamily:
    """
    Попарно непересекающиеся копии H_0, H_1, ... и автоморфизмы α_i,
    меняющие местами H_0 и H_i и тождественные вне H_0 ∪ H_i (α_0 = id).

    locate(v) возвращает номер копии, содержащей v; без него копии перебираются
    до max_index.
    """
    name: str
    graph: GraphPresentation
    copy_fn: Callable[[int], SubgraphSpec]
    alt_fn: Callable[[int], VertexMap]
    support: SubgraphSpec
    locate: Optional[Locator] = None
    max_index: int = field(default_factory=lambda: get_config().max_copy_index)
    _copies: Dict[int, SubgraphSpec] = field(default_factory=dict, init=False, repr=False)
    _alts: Dict[int, VertexMap] = field(default_factory=dict, init=False, repr=False)
    _lock: Lock = field(default_factory=Lock, init=False, repr=False)

    def copy(self, i: int) -> SubgraphSpec:
        """Копия H_i"""
        with self._lock:
            if i not in self._copies:
                self._copies[i] = self.copy_fn(i)
            return self._copies[i]

    def alt(self, i: int) -> VertexMap:
        """Чередующий автоморфизм α_i"""
        with self._lock:
            if i not in self._alts:
                self._alts[i] = self.alt_fn(i)
            return self._alts[i]

    def index_of(self, v: VertexId) -> Optional[int]:
        """
        Номер копии, содержащей v, или None.

        Raises:
            DisjointnessError: если v лежит сразу в двух копиях
        """
        if self.locate is not None:
            return self.locate(v)
        found: List[int] = [i for i in range(self.max_index + 1) if self.copy(i).contains(v)]
        if len(found) > 1:
            raise DisjointnessError(v, f"{self.name}: copies H_{found[0]} and H_{found[1]}")
        return found[0] if found else None

    def _box_copy(self, box: CoordSet) -> Optional[int]:
        """Номер копии, целиком содержащей коробку (точно), или None"""
        for i in range(self.max_index + 1):
            if spec_contains(box, self.copy(i)).kind == "contained":
                return i
        return None

    def _box_outside(self, box: CoordSet, *specs: SubgraphSpec) -> bool:
        return all(spec_disjoint(box, spec).kind == "disjoint" for spec in specs)

    def beta_map(self, i: int, j: int) -> VertexMap:
        """
        β(i, j): на H_j действует как α_i ∘ α_j, на H_i как α_j ∘ α_i, вне их тождественно.

        Raises:
            WorkbenchError: при i = j или индексе вне [0, max_index]
        """
        if i == j:
            raise WorkbenchError(f"beta({i},{j}) needs two distinct copy indices")
        for index in (i, j):
            if index < 0 or index > self.max_index:
                raise WorkbenchError(f"copy index {index} outside [0, {self.max_index}]")
        ai, aj = self.alt(i), self.alt(j)
        family = self

        def forward(v: VertexId) -> VertexId:
            k = family.index_of(v)
            if k == j:
                return ai.forward(aj.forward(v))
            if k == i:
                return aj.forward(ai.forward(v))
            return v

        def backward(w: VertexId) -> VertexId:
            k = family.index_of(w)
            if k == i:
                return aj.backward(ai.backward(w))
            if k == j:
                return ai.backward(aj.backward(w))
            return w

        def box_image(box: CoordSet) -> Optional[CoordSet]:
            ci, cj = family.copy(i), family.copy(j)
            if spec_contains(box, cj).kind == "contained":
                middle = aj.image_box(box)
                return None if middle is None else ai.image_box(middle)
            if spec_contains(box, ci).kind == "contained":
                middle = ai.image_box(box)
                return None if middle is None else aj.image_box(middle)
            if family._box_outside(box, ci, cj):
                return box
            return None

        return VertexMap(
            forward=forward,
            backward=backward,
            source=self.graph,
            target=self.graph,
            support=Union((self.copy(i), self.copy(j))),
            label=f"beta({i},{j})",
            box_image=box_image,
            box_preimage=box_image,
        )

    def reindexed_without(self, skipped: int, name: Optional[str] = None) -> "AlternatingFamily":
        """
        Семейство без копии H_skipped: H'_0 = H_0, далее H_1, ... с пропуском.

        Для skipped = 1 стандартный изоморфизм нового семейства фиксирует H_1.
        """
        def original(i: int) -> int:
            return i if i < skipped else i + 1

        def locate(v: VertexId) -> Optional[int]:
            k = self.index_of(v)
            if k is None or k == skipped:
                return None
            return k if k < skipped else k - 1

        return AlternatingFamily(
            name=name or f"{self.name} without H_{skipped}",
            graph=self.graph,
            copy_fn=lambda i: self.copy(original(i)),
            alt_fn=lambda i: self.alt(original(i)),
            support=Difference(self.support, self.copy(skipped)),
            locate=locate,
            max_index=self.max_index - 1,
        )


def beta(fam: AlternatingFamily, i: int, j: int) -> VertexMap:
    """β(i, j) семейства"""
    return fam.beta_map(i, j)


def standard_isomorphism(fam: AlternatingFamily, label: str = "std") -> VertexMap:
    """
    Стандартный изоморфизм G -> G∖H_0: на H_i действует как α_{i+1} ∘ α_i, вне копий тождественно.

    Обратное: на H_i (i >= 1) это α_{i-1}^{-1} ∘ α_i^{-1}; вершины H_0 вне образа.
    """
    target = remove(fam.graph, fam.copy(0), family_id=f"{fam.graph.family_id} - H0")

    def forward(v: VertexId) -> VertexId:
        k = fam.index_of(v)
        if k is None:
            return v
        return fam.alt(k + 1).forward(fam.alt(k).forward(v))

    def backward(w: VertexId) -> VertexId:
        k = fam.index_of(w)
        if k is None:
            return w
        if k == 0:
            raise NotInDomainError(w, label)
        return fam.alt(k - 1).backward(fam.alt(k).backward(w))

    def box_image(box: CoordSet) -> Optional[CoordSet]:
        k = fam._box_copy(box)
        if k is not None and k < fam.max_index:
            middle = fam.alt(k).image_box(box)
            return None if middle is None else fam.alt(k + 1).image_box(middle)
        if fam._box_outside(box, fam.support):
            return box
        return None

    def box_preimage(box: CoordSet) -> Optional[CoordSet]:
        k = fam._box_copy(box)
        if k is not None and k >= 1:
            middle = fam.alt(k).preimage_box(box)
            return None if middle is None else fam.alt(k - 1).preimage_box(middle)
        if fam._box_outside(box, fam.support):
            return box
        return None

    return VertexMap(
        forward=forward,
        backward=backward,
        source=fam.graph,
        target=target,
        support=fam.support,
        label=label,
        box_image=box_image,
        box_preimage=box_preimage,
    )


def standard_isomorphism_fixing_first(fam: AlternatingFamily, label: str = "fstar") -> VertexMap:
    """f*: H_0 -> H_2, H_j -> H_{j+1} при j >= 2, H_1 неподвижна поточечно"""
    return standard_isomorphism(fam.reindexed_without(1), label=label)


def verify_family(fam: AlternatingFamily, k: int, n: Optional[int] = None) -> VerificationReport:
    """
    Проверка первых k копий семейства на окне из n вершин.

    Копии попарно не пересекаются (точно или по окну), каждый α_i автоморфизм,
    меняющий H_0 и H_i местами и тождественный на остальных вершинах окна; α_0 тождественен.
    """
    size = n if n is not None else get_config().verify_window
    report = VerificationReport(subject=f"{fam.name} (k={k})", window_size=size)
    for a in range(k):
        for b in range(a + 1, k):
            verdict = spec_disjoint(fam.copy(a), fam.copy(b), universe=fam.graph)
            if not verdict.holds:
                report.record("alternation", f"H_{a} and H_{b} intersect", verdict.witness)
            elif not verdict.exact:
                report.notes.append(f"H_{a}/H_{b} disjointness checked on {verdict.scan_bound} vertices")

    vertices = fam.graph.vertices(size)
    base = fam.copy(0)
    for i in range(k):
        alpha = fam.alt(i)
        if i > 0:
            report.merge(verify_iso_window(alpha, fam.graph, fam.graph, size, subject=f"alpha_{i}"))
        copy_i = fam.copy(i)
        for v in vertices:
            image = alpha.forward(v)
            if i == 0:
                ok = image == v
            elif base.contains(v):
                ok = copy_i.contains(image)
            elif copy_i.contains(v):
                ok = base.contains(image)
            else:
                ok = image == v
            if not ok:
                report.record("alternation", f"alpha_{i}", v, image)

    logger.verify(report.subject, report)
    return report
