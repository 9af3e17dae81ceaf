"""
Расширенная звезда: вершина o и столбцы a(1, c), a(2, c) для c = 1, 2, ...

a(1, c) смежна с o и с a(2, c). Отображение f сдвигает столбцы-степени простых:
p_n^j -> p_{n+1}^j, остальные вершины неподвижны.
"""
from typing import Callable, Iterator, Optional

from ..core.constraints import (
    AnyValue,
    Constraint,
    Equal,
    InFiniteSet,
    PowersOf,
    PrimePowerOfNthPrime,
    finite_values,
)
from ..core.presentation import GraphPresentation, remove
from ..core.subgraph_spec import CoordSet, Finite, Union
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
from ..services.errors import NotInDomainError, WorkbenchError
from ..services.logger_service import logger
from ..services.number_theory import (
    count_powers_upto,
    is_prime,
    next_prime,
    nth_prime,
    perfect_power_root,
    previous_prime,
    prime_index,
    prime_power_decompose,
)
from ..twins.witness import TwinWitness, twin_family
from .bundle import FamilyBundle, reverse_catalogue

FAMILY_ID = "extended-star"
ROOT = VertexId("o", ())
ROWS = InFiniteSet(frozenset({1, 2}))
NONREMOVABLE_AXIOM = "P = {a(2, 2^j)} is not removable in G (declared, not verified)"

ColumnFn = Callable[[int], Optional[int]]
PrimeFn = Callable[[int], Optional[int]]


def _is_member(v: VertexId) -> bool:
    if v.tag == "o":
        return True
    return v.coords[0] in (1, 2)


def _adjacent(u: VertexId, v: VertexId) -> bool:
    if u.tag == "o" or v.tag == "o":
        other = v if u.tag == "o" else u
        return other.tag == "a" and other.coords[0] == 1
    (ru, cu), (rv, cv) = u.coords, v.coords
    return cu == cv and ru != rv


def _enumerate() -> Iterator[VertexId]:
    yield ROOT
    column = 1
    while True:
        yield VertexId("a", (1, column))
        yield VertexId("a", (2, column))
        column += 1


def extended_star_graph() -> GraphPresentation:
    """Граф расширенной звезды"""
    return GraphPresentation(
        family_id=FAMILY_ID,
        arity={"o": 0, "a": 2},
        membership=_is_member,
        adjacency=_adjacent,
        enumeration=_enumerate,
    )


def column_spec(base: int, row: Optional[int] = None) -> CoordSet:
    """Столбцы base^j (в одной строке или в обеих)"""
    rows: Constraint = ROWS if row is None else Equal(row)
    return CoordSet("a", (rows, PowersOf(base)))


# --- отображения столбцов ------------------------------------------------------------

def _prime_shift(step: PrimeFn) -> ColumnFn:
    """p^j -> step(p)^j; не степени простых неподвижны; None вне области"""
    def move(c: int) -> Optional[int]:
        decomposed = prime_power_decompose(c)
        if decomposed is None:
            return c
        p, j = decomposed
        q = step(p)
        return None if q is None else q ** j
    return move


def _prime_swap(a: int, b: int) -> ColumnFn:
    """Меняет местами степени p_a и p_b (номера простых с единицы)"""
    pa, pb = nth_prime(a), nth_prime(b)

    def move(c: int) -> Optional[int]:
        decomposed = prime_power_decompose(c)
        if decomposed is None:
            return c
        p, j = decomposed
        if p == pa:
            return pb ** j
        if p == pb:
            return pa ** j
        return c
    return move


def _map_constraint(c: Constraint, move: ColumnFn, prime_map: PrimeFn) -> Optional[Constraint]:
    """
    Образ ограничения на столбец.

    prime_map переводит простое p в простое образа (None, если степени p
    выходят из области). Бесконечные множества, не выражаемые через степени, дают None.
    """
    values = finite_values(c)
    if values is not None:
        moved = [move(x) for x in values]
        if any(x is None for x in moved):
            return None
        return Equal(moved[0]) if len(moved) == 1 else InFiniteSet(frozenset(moved))
    if isinstance(c, PowersOf):
        root, s = perfect_power_root(c.base)
        if not is_prime(root):
            return c
        q = prime_map(root)
        if q is None:
            return None
        return PowersOf(q ** s)
    return None


def _column_box(move: ColumnFn, prime_map: PrimeFn, whole: Callable[[Constraint], Optional[Constraint]]):
    def image(box: CoordSet) -> Optional[CoordSet]:
        if box.tag != "a":
            return box
        rows, columns = box.constraints
        moved = _map_constraint(columns, move, prime_map)
        if moved is None:
            moved = whole(columns)
        if moved is None:
            return None
        return CoordSet("a", (rows, moved))
    return image


def _vertex_map(
    move: ColumnFn,
    back: ColumnFn,
    source: GraphPresentation,
    target: GraphPresentation,
    label: str,
    support,
    box_image,
    box_preimage,
) -> VertexMap:
    def forward(v: VertexId) -> VertexId:
        if v.tag != "a":
            return v
        row, column = v.coords
        moved = move(column)
        if moved is None:
            raise NotInDomainError(v, label)
        return VertexId("a", (row, moved))

    def backward(w: VertexId) -> VertexId:
        if w.tag != "a":
            return w
        row, column = w.coords
        moved = back(column)
        if moved is None:
            raise NotInDomainError(w, label)
        return VertexId("a", (row, moved))

    return VertexMap(forward, backward, source, target, support, label, box_image, box_preimage)


def prime_shift_map(graph: GraphPresentation, target: GraphPresentation) -> VertexMap:
    """f: a(r, p_n^j) -> a(r, p_{n+1}^j)"""
    def shift_range(c: Constraint, delta: int) -> Optional[Constraint]:
        if isinstance(c, PrimePowerOfNthPrime) and c.low + delta >= 1:
            high = None if c.high is None else c.high + delta
            return PrimePowerOfNthPrime(c.low + delta, high)
        return None

    return _vertex_map(
        _prime_shift(next_prime),
        _prime_shift(previous_prime),
        graph,
        target,
        "f",
        CoordSet("a", (ROWS, PrimePowerOfNthPrime(1, None))),
        _column_box(_prime_shift(next_prime), next_prime, lambda c: shift_range(c, 1)),
        _column_box(_prime_shift(previous_prime), previous_prime, lambda c: shift_range(c, -1)),
    )


def column_swap_map(graph: GraphPresentation, i: int) -> VertexMap:
    """α_i: меняет местами столбцы 2^j и p_{i+1}^j (обе строки); α_0 = id"""
    if i == 0:
        return identity_map(graph)
    a, b = 1, i + 1
    pa, pb = nth_prime(a), nth_prime(b)

    def prime_map(p: int) -> Optional[int]:
        return pb if p == pa else (pa if p == pb else p)

    def whole(c: Constraint) -> Optional[Constraint]:
        if isinstance(c, AnyValue):
            return c
        if isinstance(c, PrimePowerOfNthPrime):
            inside = [c.low <= n and (c.high is None or n <= c.high) for n in (a, b)]
            return c if inside[0] == inside[1] else None
        return None

    box = _column_box(_prime_swap(a, b), prime_map, whole)
    support = Union((column_spec(pa), column_spec(pb)))
    return _vertex_map(
        _prime_swap(a, b),
        _prime_swap(a, b),
        graph,
        graph,
        f"alpha_{i}",
        support,
        box,
        box,
    )


def column_transposition(c: int, d: int, graph: Optional[GraphPresentation] = None) -> VertexMap:
    """Автоморфизм, меняющий местами столбцы c и d целиком"""
    G = graph or extended_star_graph()

    def move(x: int) -> Optional[int]:
        return d if x == c else (c if x == d else x)

    def box(b: CoordSet) -> Optional[CoordSet]:
        if b.tag != "a":
            return b
        rows, columns = b.constraints
        if columns.contains(c) == columns.contains(d):
            return b
        values = finite_values(columns)
        if values is None:
            return None
        return CoordSet("a", (rows, InFiniteSet(frozenset(move(x) for x in values))))

    support = CoordSet("a", (ROWS, InFiniteSet(frozenset({c, d}))))
    return _vertex_map(move, move, G, G, f"col({c},{d})", support, box, box)


def locate_copy(v: VertexId) -> Optional[int]:
    """
    Номер копии H_i (столбцы p_{i+1}^j), содержащей вершину

    Raises:
        CoordinateLimitError: столбец степень простого выше границы таблицы простых
    """
    if v.tag != "a":
        return None
    decomposed = prime_power_decompose(v.coords[1])
    if decomposed is None:
        return None
    return prime_index(decomposed[0]) - 1


# --- изоморфизм G_k -> G_1 ------------------------------------------------------------

def _smallest(predicate: Callable[[int], bool]) -> int:
    """Наименьшее x >= 1 с монотонным predicate(x)"""
    high = 1
    while not predicate(high):
        high *= 2
    low = high // 2 + 1 if high > 1 else 1
    while low < high:
        middle = (low + high) // 2
        if predicate(middle):
            high = middle
        else:
            low = middle + 1
    return low


def collapse_iso_extended_star(k: int, bundle: Optional[FamilyBundle] = None) -> VertexMap:
    """
    Явный изоморфизм G_k -> G_1 для расширенной звезды.

    В G_k "половинные" столбцы (без a(2, c)) это степени первых k простых, в G_1 это
    степени двойки. Половинные столбцы сопоставляются половинным, полные полным,
    по возрастанию номера столбца; o неподвижна.

    Raises:
        WorkbenchError: k вне [2, 16]
    """
    if not 2 <= k <= 16:
        raise WorkbenchError(f"collapse isomorphism is built for 2 <= k <= 16, got {k}")
    owner = bundle or extended_star()
    source = twin_family(owner.twin, k).graph
    target = twin_family(owner.twin, 1).graph
    primes = [nth_prime(n) for n in range(1, k + 1)]

    def half_source(x: int) -> int:
        return sum(count_powers_upto(p, x) for p in primes)

    def half_target(x: int) -> int:
        return count_powers_upto(2, x)

    def is_half_source(c: int) -> bool:
        decomposed = prime_power_decompose(c)
        return decomposed is not None and decomposed[0] in primes

    def move(c: int) -> int:
        if is_half_source(c):
            return 2 ** half_source(c)
        rank = c - half_source(c)
        return _smallest(lambda d: d - half_target(d) >= rank)

    def back(d: int) -> int:
        decomposed = prime_power_decompose(d)
        if decomposed is not None and decomposed[0] == 2:
            rank = decomposed[1]
            return _smallest(lambda c: half_source(c) >= rank)
        rank = d - half_target(d)
        return _smallest(lambda c: c - half_source(c) >= rank)

    support = CoordSet("a", (ROWS, AnyValue()))
    logger.family(f"collapse G{k} -> G1", FAMILY_ID)
    return _vertex_map(move, back, source, target, f"collapse_{k}", support, None, None)


def extended_star() -> FamilyBundle:
    """Комплект расширенной звезды со сдвигом простых, столбцовыми перестановками и близнецами"""
    G = extended_star_graph()
    H = column_spec(2)
    P = column_spec(2, row=2)
    minus_H = remove(G, H, family_id=f"{FAMILY_ID} - H")
    f = prime_shift_map(G, minus_H)

    alt = AlternatingFamily(
        name=f"{FAMILY_ID} column swaps",
        graph=G,
        copy_fn=lambda i: column_spec(nth_prime(i + 1)),
        alt_fn=lambda i: column_swap_map(G, i),
        support=CoordSet("a", (ROWS, PrimePowerOfNthPrime(1, None))),
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

    logger.family("extended_star", FAMILY_ID)
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
            "fH": column_spec(3),
            "o": Finite(frozenset({ROOT})),
        },
        notes=[NONREMOVABLE_AXIOM],
        catalogue_fn=reverse_catalogue,
    )
