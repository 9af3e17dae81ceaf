"""
Символьная алгебра подмножеств вершин: конечные множества, координатные множества,
образы под отображениями, объединения и разности.

Пересечение и включение решаются точно, если обе стороны нормализуются в объединение
конечного множества и координатных "коробок"; иначе ответ приближённый по окну
с явно указанной границей сканирования.
"""
from dataclasses import dataclass, field, replace
from itertools import islice, product
from typing import TYPE_CHECKING, FrozenSet, Iterable, List, Literal, Optional, Protocol, Tuple

from pydantic import BaseModel

from ..config import get_config
from ..services.errors import MembershipError, NotInDomainError
from . import constraints as cs
from .constraints import Constraint
from .vertex import VertexId, format_vertex

if TYPE_CHECKING:
    from .presentation import GraphPresentation

# Предел раскрытия конечной коробки в явный список вершин
_EXPAND_LIMIT = 4096


class SetMap(Protocol):
    """То, что нужно алгебре подмножеств от отображения вершин"""
    label: str

    def forward(self, v: VertexId) -> VertexId: ...

    def backward(self, v: VertexId) -> VertexId: ...

    def image_box(self, box: "CoordSet") -> Optional["CoordSet"]: ...


@dataclass(frozen=True)
class Finite:
    """Явное конечное множество вершин"""
    vertices: FrozenSet[VertexId] = frozenset()

    def contains(self, v: VertexId) -> bool:
        return v in self.vertices

    def __str__(self) -> str:
        return "{" + ", ".join(format_vertex(v) for v in sorted(self.vertices)) + "}"


@dataclass(frozen=True)
class CoordSet:
    """Вершины с данным тегом, каждая координата которых удовлетворяет своему ограничению"""
    tag: str
    constraints: Tuple[Constraint, ...] = ()

    def contains(self, v: VertexId) -> bool:
        if v.tag != self.tag or len(v.coords) != len(self.constraints):
            return False
        return all(c.contains(x) for c, x in zip(self.constraints, v.coords))

    def __str__(self) -> str:
        return f"{self.tag}[{', '.join(str(c) for c in self.constraints)}]"


@dataclass(frozen=True)
class Image:
    """Образ подмножества под отображением (принадлежность через обратное отображение)"""
    map: SetMap = field(compare=True)
    base: "SubgraphSpec"

    def contains(self, v: VertexId) -> bool:
        try:
            preimage = self.map.backward(v)
        except (NotInDomainError, MembershipError):
            return False
        return self.base.contains(preimage)

    def __str__(self) -> str:
        return f"image({self.map.label}, {self.base})"


@dataclass(frozen=True)
class Union:
    parts: Tuple["SubgraphSpec", ...]

    def contains(self, v: VertexId) -> bool:
        return any(part.contains(v) for part in self.parts)

    def __str__(self) -> str:
        return "union(" + ", ".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class Difference:
    left: "SubgraphSpec"
    right: "SubgraphSpec"

    def contains(self, v: VertexId) -> bool:
        return self.left.contains(v) and not self.right.contains(v)

    def __str__(self) -> str:
        return f"({self.left} - {self.right})"


SubgraphSpec = Finite | CoordSet | Image | Union | Difference


def finite(*vertices: VertexId) -> Finite:
    return Finite(frozenset(vertices))


# --- нормальная форма -----------------------------------------------------------------

@dataclass(frozen=True)
class NormalForm:
    """Объединение конечного множества точек и координатных коробок"""
    points: FrozenSet[VertexId] = frozenset()
    boxes: Tuple[CoordSet, ...] = ()

    def contains(self, v: VertexId) -> bool:
        return v in self.points or any(box.contains(v) for box in self.boxes)

    @property
    def is_empty(self) -> bool:
        return not self.points and not self.boxes

    @property
    def is_finite(self) -> bool:
        return not self.boxes


def box_is_empty(box: CoordSet) -> bool:
    return any(cs.is_empty(c) for c in box.constraints)


def box_is_finite(box: CoordSet) -> bool:
    return all(cs.finite_values(c) is not None for c in box.constraints)


def box_points(box: CoordSet) -> FrozenSet[VertexId]:
    """Раскрыть конечную коробку в множество вершин"""
    axes = [sorted(cs.finite_values(c)) for c in box.constraints]
    return frozenset(VertexId(box.tag, tuple(coords)) for coords in product(*axes))


def box_size(box: CoordSet) -> int:
    size = 1
    for c in box.constraints:
        size *= len(cs.finite_values(c))
    return size


def box_disjoint(a: CoordSet, b: CoordSet) -> bool:
    if a.tag != b.tag or len(a.constraints) != len(b.constraints):
        return True
    return any(not cs.intersects(x, y) for x, y in zip(a.constraints, b.constraints))


def box_subset(a: CoordSet, b: CoordSet) -> bool:
    if box_is_empty(a):
        return True
    if a.tag != b.tag or len(a.constraints) != len(b.constraints):
        return False
    return all(cs.subset(x, y) for x, y in zip(a.constraints, b.constraints))


def box_common(a: CoordSet, b: CoordSet) -> Optional[VertexId]:
    """Общая вершина двух коробок (покоординатно наименьшая) или None"""
    if box_disjoint(a, b):
        return None
    coords = tuple(cs.smallest_common(x, y) for x, y in zip(a.constraints, b.constraints))
    return VertexId(a.tag, coords)


def box_min_vertex(box: CoordSet) -> VertexId:
    return VertexId(box.tag, tuple(cs.min_value(c) for c in box.constraints))


def box_difference(a: CoordSet, b: CoordSet) -> Optional[List[CoordSet]]:
    """a ∖ b как список коробок; None, если разность не выражается"""
    if box_disjoint(a, b):
        return [a]
    if box_subset(a, b):
        return []
    differing = [i for i, (x, y) in enumerate(zip(a.constraints, b.constraints)) if not cs.subset(x, y)]
    if len(differing) != 1:
        return None
    index = differing[0]
    rest = cs.difference(a.constraints[index], b.constraints[index])
    if rest is None:
        return None
    constraints = list(a.constraints)
    constraints[index] = rest
    return [replace(a, constraints=tuple(constraints))]


def _cleanup(points: Iterable[VertexId], boxes: Iterable[CoordSet]) -> NormalForm:
    """Убрать пустые коробки, раскрыть небольшие конечные"""
    all_points = set(points)
    kept: List[CoordSet] = []
    for box in boxes:
        if box_is_empty(box):
            continue
        if box_is_finite(box) and box_size(box) <= _EXPAND_LIMIT:
            all_points |= box_points(box)
        elif box not in kept:
            kept.append(box)
    return NormalForm(frozenset(all_points), tuple(kept))


def _subtract_boxes(box: CoordSet, others: Iterable[CoordSet]) -> Optional[List[CoordSet]]:
    current = [box]
    for other in others:
        remaining: List[CoordSet] = []
        for piece in current:
            parts = box_difference(piece, other)
            if parts is None:
                return None
            remaining.extend(p for p in parts if not box_is_empty(p))
        current = remaining
    return current


def normalize(spec: SubgraphSpec) -> Optional[NormalForm]:
    """Нормальная форма подмножества или None, если форма не разрешается"""
    if isinstance(spec, Finite):
        return NormalForm(spec.vertices, ())
    if isinstance(spec, CoordSet):
        return _cleanup((), (spec,))
    if isinstance(spec, Union):
        points: set = set()
        boxes: List[CoordSet] = []
        for part in spec.parts:
            nf = normalize(part)
            if nf is None:
                return None
            points |= nf.points
            boxes.extend(nf.boxes)
        return _cleanup(points, boxes)
    if isinstance(spec, Difference):
        left, right = normalize(spec.left), normalize(spec.right)
        if left is None or right is None:
            return None
        points = {p for p in left.points if not right.contains(p)}
        boxes = []
        for box in left.boxes:
            remainder = _subtract_boxes(box, right.boxes)
            if remainder is None:
                return None
            for piece in remainder:
                if any(piece.contains(p) for p in right.points):
                    # бесконечная коробка с выколотыми точками не выражается
                    return None
            boxes.extend(remainder)
        return _cleanup(points, boxes)
    if isinstance(spec, Image):
        base = normalize(spec.base)
        if base is None:
            return None
        try:
            points = {spec.map.forward(p) for p in base.points}
        except (NotInDomainError, MembershipError):
            return None
        boxes = []
        for box in base.boxes:
            image = spec.map.image_box(box)
            if image is None:
                return None
            boxes.append(image)
        return _cleanup(points, boxes)
    raise TypeError(f"unsupported subgraph spec: {spec!r}")


def from_normal_form(nf: NormalForm) -> SubgraphSpec:
    """Собрать спецификацию из нормальной формы"""
    parts: List[SubgraphSpec] = []
    if nf.points or not nf.boxes:
        parts.append(Finite(nf.points))
    parts.extend(nf.boxes)
    return parts[0] if len(parts) == 1 else Union(tuple(parts))


def image_spec(m: SetMap, spec: SubgraphSpec) -> SubgraphSpec:
    """Образ подмножества: символьный, если удаётся нормализовать, иначе узел Image"""
    image = Image(m, spec)
    nf = normalize(image)
    if nf is None:
        return image
    return from_normal_form(nf)


def is_finite_spec(spec: SubgraphSpec) -> Optional[bool]:
    """True/False для разрешимых форм, None если форма не нормализуется"""
    nf = normalize(spec)
    if nf is None:
        return None
    return nf.is_finite


def spec_points(spec: SubgraphSpec) -> Optional[FrozenSet[VertexId]]:
    """Явные вершины конечного подмножества или None"""
    nf = normalize(spec)
    if nf is None or not nf.is_finite:
        return None
    return nf.points


# --- вердикты -------------------------------------------------------------------------

class SetVerdict(BaseModel):
    """Ответ на вопрос о пересечении или включении подмножеств"""
    kind: Literal["disjoint", "intersecting", "contained", "not-contained", "approximate"]
    witness: Optional[VertexId] = None
    scan_bound: Optional[int] = None
    window_holds: Optional[bool] = None

    @property
    def exact(self) -> bool:
        return self.kind != "approximate"

    @property
    def holds(self) -> bool:
        """Выполняется ли свойство (точно или на окне)"""
        if self.kind == "approximate":
            return bool(self.window_holds)
        return self.kind in ("disjoint", "contained")


def _scan(universe: Optional["GraphPresentation"], scan: Optional[int]) -> Tuple[List[VertexId], int]:
    if universe is None:
        return [], 0
    bound = scan if scan is not None else get_config().disjoint_scan
    return universe.vertices(bound), bound


def spec_disjoint(
    a: SubgraphSpec,
    b: SubgraphSpec,
    universe: Optional["GraphPresentation"] = None,
    scan: Optional[int] = None,
) -> SetVerdict:
    """
    Пересекаются ли два подмножества.

    Args:
        a, b: Подмножества вершин
        universe: Граф, по окну которого даётся приближённый ответ
        scan: Граница сканирования для приближённого ответа
    """
    na, nb = normalize(a), normalize(b)
    if na is not None and nb is not None:
        for p in sorted(na.points):
            if nb.contains(p):
                return SetVerdict(kind="intersecting", witness=p)
        for p in sorted(nb.points):
            if na.contains(p):
                return SetVerdict(kind="intersecting", witness=p)
        for x in na.boxes:
            for y in nb.boxes:
                common = box_common(x, y)
                if common is not None:
                    return SetVerdict(kind="intersecting", witness=common)
        return SetVerdict(kind="disjoint")

    vertices, bound = _scan(universe, scan)
    for v in vertices:
        if a.contains(v) and b.contains(v):
            return SetVerdict(kind="approximate", witness=v, scan_bound=bound, window_holds=False)
    return SetVerdict(kind="approximate", scan_bound=bound, window_holds=True)


def _box_witness_outside(box: CoordSet, points: FrozenSet[VertexId]) -> VertexId:
    """Вершина бесконечной коробки, не попавшая в конечное множество точек"""
    base = [cs.min_value(c) for c in box.constraints]
    axis = next(i for i, c in enumerate(box.constraints) if cs.finite_values(c) is None)
    for value in islice(cs.iter_values(box.constraints[axis]), len(points) + 1):
        coords = list(base)
        coords[axis] = value
        candidate = VertexId(box.tag, tuple(coords))
        if candidate not in points:
            return candidate
    raise AssertionError("infinite box exhausted by finitely many points")


def spec_contains(
    a: SubgraphSpec,
    b: SubgraphSpec,
    universe: Optional["GraphPresentation"] = None,
    scan: Optional[int] = None,
) -> SetVerdict:
    """Включение a ⊆ b: точный ответ для нормализуемых форм, иначе по окну"""
    na, nb = normalize(a), normalize(b)
    if na is not None and nb is not None:
        for p in sorted(na.points):
            if not nb.contains(p):
                return SetVerdict(kind="not-contained", witness=p)
        resolved = True
        for box in na.boxes:
            remainder = _subtract_boxes(box, nb.boxes)
            if remainder is None:
                resolved = False
                break
            for piece in remainder:
                if box_is_finite(piece):
                    outside = sorted(p for p in box_points(piece) if p not in nb.points)
                    if outside:
                        return SetVerdict(kind="not-contained", witness=outside[0])
                else:
                    return SetVerdict(kind="not-contained", witness=_box_witness_outside(piece, nb.points))
        if resolved:
            return SetVerdict(kind="contained")

    vertices, bound = _scan(universe, scan)
    for v in vertices:
        if a.contains(v) and not b.contains(v):
            return SetVerdict(kind="approximate", witness=v, scan_bound=bound, window_holds=False)
    return SetVerdict(kind="approximate", scan_bound=bound, window_holds=True)


def covers_tags(spec: SubgraphSpec, arity: dict) -> bool:
    """Покрывает ли подмножество все вершины всех тегов (удаление всего графа)"""
    nf = normalize(spec)
    if nf is None:
        return False
    for tag, size in arity.items():
        full = CoordSet(tag, tuple(cs.AnyValue() for _ in range(size)))
        if not any(box_subset(full, box) for box in nf.boxes):
            if not (size == 0 and VertexId(tag, ()) in nf.points):
                return False
    return True
