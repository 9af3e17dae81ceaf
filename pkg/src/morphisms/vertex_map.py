"""
Вычислимые биекции вершин с явным обратным отображением
"""
from typing import Callable, Optional

from ..core.presentation import GraphPresentation
from ..core.subgraph_spec import CoordSet, Finite, SubgraphSpec, Union
from ..core.vertex import VertexId
from ..services.errors import FamilyMismatchError, MembershipError, NotInDomainError

VertexFn = Callable[[VertexId], VertexId]
BoxFn = Callable[[CoordSet], Optional[CoordSet]]


def _no_box(box: CoordSet) -> Optional[CoordSet]:
    return None


class VertexMap:
    """
    Отображение вершин source -> target.

    forward/backward вызываются без проверки принадлежности (ими пользуется алгебра
    подмножеств); вызов map(v) проверяет, что v лежит в source. backward бросает
    NotInDomainError для вершин вне образа. support задаёт множество, вне которого
    отображение тождественно.
    """

    def __init__(
        self,
        forward: VertexFn,
        backward: VertexFn,
        source: GraphPresentation,
        target: GraphPresentation,
        support: SubgraphSpec,
        label: str,
        box_image: Optional[BoxFn] = None,
        box_preimage: Optional[BoxFn] = None,
    ):
        self._forward = forward
        self._backward = backward
        self.source = source
        self.target = target
        self.support = support
        self.label = label
        self._box_image = box_image or _no_box
        self._box_preimage = box_preimage or _no_box

    def __repr__(self) -> str:
        return f"VertexMap({self.label}: {self.source.family_id} -> {self.target.family_id})"

    def forward(self, v: VertexId) -> VertexId:
        return self._forward(v)

    def backward(self, v: VertexId) -> VertexId:
        return self._backward(v)

    def image_box(self, box: CoordSet) -> Optional[CoordSet]:
        """Символьный образ координатной коробки или None"""
        return self._box_image(box)

    def preimage_box(self, box: CoordSet) -> Optional[CoordSet]:
        return self._box_preimage(box)

    def __call__(self, v: VertexId) -> VertexId:
        """
        Образ вершины source.

        Raises:
            MembershipError: если v не вершина source
        """
        return self._forward(self.source.require(v))

    @property
    def source_id(self) -> str:
        return self.source.family_id

    @property
    def target_id(self) -> str:
        return self.target.family_id

    def compose(self, inner: "VertexMap") -> "VertexMap":
        """
        self ∘ inner: сначала inner, затем self.

        Raises:
            FamilyMismatchError: если отображения построены над разными исходными графами
        """
        if inner.target.root_id != self.source.root_id:
            raise FamilyMismatchError(self.source.root_id, inner.target.root_id)
        outer = self

        def box_image(box: CoordSet) -> Optional[CoordSet]:
            middle = inner.image_box(box)
            return None if middle is None else outer.image_box(middle)

        def box_preimage(box: CoordSet) -> Optional[CoordSet]:
            middle = outer.preimage_box(box)
            return None if middle is None else inner.preimage_box(middle)

        return VertexMap(
            forward=lambda v: outer._forward(inner._forward(v)),
            backward=lambda w: inner._backward(outer._backward(w)),
            source=inner.source,
            target=outer.target,
            support=Union((inner.support, outer.support)),
            label=f"{outer.label} * {inner.label}",
            box_image=box_image,
            box_preimage=box_preimage,
        )

    def inverse(self) -> "VertexMap":
        """Обратное отображение target -> source"""
        return VertexMap(
            forward=self._backward,
            backward=self._forward,
            source=self.target,
            target=self.source,
            support=self.support,
            label=f"inv({self.label})",
            box_image=self._box_preimage,
            box_preimage=self._box_image,
        )

    def power(self, k: int) -> "VertexMap":
        """k-я степень (k >= 0); отрицательные степени строятся через inverse()"""
        if k < 0:
            return self.inverse().power(-k)
        if k == 0:
            return identity_map(self.source)
        if k == 1:
            return self
        base = self
        if base.target.root_id != base.source.root_id:
            raise FamilyMismatchError(base.source.root_id, base.target.root_id)

        def forward(v: VertexId) -> VertexId:
            for _ in range(k):
                v = base._forward(v)
            return v

        def backward(w: VertexId) -> VertexId:
            for _ in range(k):
                w = base._backward(w)
            return w

        def iterate(step: BoxFn) -> BoxFn:
            def apply(box: CoordSet) -> Optional[CoordSet]:
                for _ in range(k):
                    box = step(box)
                    if box is None:
                        return None
                return box
            return apply

        return VertexMap(
            forward=forward,
            backward=backward,
            source=base.source,
            target=base.target,
            support=base.support,
            label=f"{base.label}^{k}",
            box_image=iterate(base._box_image),
            box_preimage=iterate(base._box_preimage),
        )

    def restricted_to(self, graph: GraphPresentation, target: Optional[GraphPresentation] = None) -> "VertexMap":
        """То же отображение с другим source (и target); проверки делает вызывающий"""
        return VertexMap(
            forward=self._forward,
            backward=self._backward,
            source=graph,
            target=target or graph,
            support=self.support,
            label=self.label,
            box_image=self._box_image,
            box_preimage=self._box_preimage,
        )


def identity_map(graph: GraphPresentation, target: Optional[GraphPresentation] = None) -> VertexMap:
    """Тождественное отображение (или включение graph -> target)"""
    owner = graph

    def backward(w: VertexId) -> VertexId:
        try:
            inside = owner.contains(w)
        except MembershipError:
            inside = False
        if not inside:
            raise NotInDomainError(w, "id")
        return w

    return VertexMap(
        forward=lambda v: v,
        backward=backward,
        source=graph,
        target=target or graph,
        support=Finite(frozenset()),
        label="id",
        box_image=lambda box: box,
        box_preimage=lambda box: box,
    )
