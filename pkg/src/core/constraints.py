"""
Ограничения на одну координату вершины: множества натуральных чисел с точными решениями
пересечения, включения и (частично) разности.
"""
from dataclasses import dataclass
from itertools import count
from math import lcm
from typing import FrozenSet, Iterator, Optional, Union

from ..services.number_theory import (
    is_prime,
    nth_prime,
    perfect_power_root,
    prime_power_decompose,
)


@dataclass(frozen=True)
class AnyValue:
    """Любое натуральное число"""

    def contains(self, x: int) -> bool:
        return x >= 1

    def __str__(self) -> str:
        return "*"


@dataclass(frozen=True)
class Equal:
    """Ровно одно значение"""
    value: int

    def contains(self, x: int) -> bool:
        return x == self.value

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class InFiniteSet:
    """Конечное множество значений (пустое множество тоже допустимо)"""
    values: FrozenSet[int]

    def contains(self, x: int) -> bool:
        return x in self.values

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in sorted(self.values)) + "}"


@dataclass(frozen=True)
class AtLeast:
    """Все значения >= bound"""
    bound: int

    def contains(self, x: int) -> bool:
        return x >= self.bound

    def __str__(self) -> str:
        return f">={self.bound}"


@dataclass(frozen=True)
class PowersOf:
    """Степени base^j, j >= 1"""
    base: int

    def __post_init__(self):
        if self.base < 2:
            raise ValueError(f"PowersOf base must be >= 2, got {self.base}")

    def contains(self, x: int) -> bool:
        if x < self.base:
            return False
        while x % self.base == 0:
            x //= self.base
        return x == 1

    def __str__(self) -> str:
        return f"{self.base}^j"


@dataclass(frozen=True)
class PrimePowerOfNthPrime:
    """Степени p_n^j (j >= 1) для номеров простых n в [low, high]; high=None означает без ограничения"""
    low: int = 1
    high: Optional[int] = None

    def contains(self, x: int) -> bool:
        decomposed = prime_power_decompose(x)
        if decomposed is None:
            return False
        return _in_range(decomposed[0], self)

    def __str__(self) -> str:
        top = "" if self.high is None else str(self.high)
        return f"p[{self.low}..{top}]^j"


Constraint = Union[AnyValue, Equal, InFiniteSet, AtLeast, PowersOf, PrimePowerOfNthPrime]

EMPTY = InFiniteSet(frozenset())


def finite_values(c: Constraint) -> Optional[FrozenSet[int]]:
    """Значения конечного ограничения или None для бесконечного"""
    if isinstance(c, Equal):
        return frozenset((c.value,))
    if isinstance(c, InFiniteSet):
        return c.values
    if isinstance(c, PrimePowerOfNthPrime) and c.high is not None and c.high < c.low:
        return frozenset()
    return None


def is_empty(c: Constraint) -> bool:
    values = finite_values(c)
    return values is not None and not values


def min_value(c: Constraint) -> int:
    """Наименьший элемент непустого ограничения"""
    values = finite_values(c)
    if values is not None:
        if not values:
            raise ValueError("empty constraint has no minimum")
        return min(values)
    if isinstance(c, AnyValue):
        return 1
    if isinstance(c, AtLeast):
        return c.bound
    if isinstance(c, PowersOf):
        return c.base
    return nth_prime(c.low)


def iter_values(c: Constraint) -> Iterator[int]:
    """Элементы ограничения по возрастанию"""
    values = finite_values(c)
    if values is not None:
        yield from sorted(values)
        return
    if isinstance(c, PowersOf):
        value = c.base
        while True:
            yield value
            value *= c.base
    start = min_value(c)
    for x in count(start):
        if c.contains(x):
            yield x


# Чем меньше ранг, тем разреженнее перечисление
_SPARSITY = {InFiniteSet: 0, Equal: 0, PowersOf: 1, PrimePowerOfNthPrime: 2, AtLeast: 3, AnyValue: 4}


def _prime_root(base: int) -> Optional[int]:
    """Простое p, если base = p^s; иначе None"""
    root, _ = perfect_power_root(base)
    return root if is_prime(root) else None


def _in_range(p: int, c: PrimePowerOfNthPrime) -> bool:
    """Лежит ли простое p среди p_low..p_high (сравнение самих простых, без их номеров)"""
    return p >= nth_prime(c.low) and (c.high is None or p <= nth_prime(c.high))


def intersects(a: Constraint, b: Constraint) -> bool:
    """Точное решение: пересекаются ли два ограничения"""
    if is_empty(a) or is_empty(b):
        return False
    fa = finite_values(a)
    if fa is not None:
        return any(b.contains(x) for x in fa)
    fb = finite_values(b)
    if fb is not None:
        return any(a.contains(x) for x in fb)
    # оба бесконечны, значит неограничены сверху
    if isinstance(a, (AnyValue, AtLeast)) or isinstance(b, (AnyValue, AtLeast)):
        return True
    if isinstance(a, PowersOf) and isinstance(b, PowersOf):
        return perfect_power_root(a.base)[0] == perfect_power_root(b.base)[0]
    if isinstance(a, PrimePowerOfNthPrime) and isinstance(b, PrimePowerOfNthPrime):
        low = max(a.low, b.low)
        highs = [h for h in (a.high, b.high) if h is not None]
        return not highs or low <= min(highs)
    powers, primes = (a, b) if isinstance(a, PowersOf) else (b, a)
    p = _prime_root(powers.base)
    return p is not None and _in_range(p, primes)


def smallest_common(a: Constraint, b: Constraint) -> Optional[int]:
    """Наименьший общий элемент двух ограничений или None"""
    if not intersects(a, b):
        return None
    sparse, other = (a, b) if _SPARSITY[type(a)] <= _SPARSITY[type(b)] else (b, a)
    if isinstance(sparse, PowersOf) and isinstance(other, PowersOf):
        root, s = perfect_power_root(sparse.base)
        _, t = perfect_power_root(other.base)
        return root ** lcm(s, t)
    for x in iter_values(sparse):
        if other.contains(x):
            return x
    return None


def subset(a: Constraint, b: Constraint) -> bool:
    """Точное решение: a ⊆ b"""
    if is_empty(a):
        return True
    fa = finite_values(a)
    if fa is not None:
        return all(b.contains(x) for x in fa)
    if finite_values(b) is not None:
        return False
    if isinstance(b, AnyValue):
        return True
    if isinstance(b, AtLeast):
        return min_value(a) >= b.bound
    if isinstance(a, (AnyValue, AtLeast)):
        return False
    if isinstance(a, PowersOf) and isinstance(b, PowersOf):
        root_a, s = perfect_power_root(a.base)
        root_b, t = perfect_power_root(b.base)
        return root_a == root_b and s % t == 0
    if isinstance(a, PowersOf):
        p = _prime_root(a.base)
        return p is not None and _in_range(p, b)
    if isinstance(b, PowersOf):
        return a.high == a.low and b.base == nth_prime(a.low)
    if a.low < b.low:
        return False
    if b.high is None:
        return True
    return a.high is not None and a.high <= b.high


def difference(a: Constraint, b: Constraint) -> Optional[Constraint]:
    """
    a ∖ b, если результат выражается одним ограничением; иначе None
    """
    if subset(a, b):
        return EMPTY
    if not intersects(a, b):
        return a
    fa = finite_values(a)
    if fa is not None:
        return InFiniteSet(frozenset(x for x in fa if not b.contains(x)))
    start = 1 if isinstance(a, AnyValue) else (a.bound if isinstance(a, AtLeast) else None)
    if start is None:
        return None
    if isinstance(b, AtLeast):
        return InFiniteSet(frozenset(range(start, b.bound)))
    fb = finite_values(b)
    if fb is not None:
        # снимаем начальный отрезок; дыры в середине не выражаются
        cut = start
        while cut in fb:
            cut += 1
        if any(x > cut for x in fb):
            return None
        return AtLeast(cut) if cut > 1 else AnyValue()
    return None


def shift(c: Constraint, delta: int) -> Optional[Constraint]:
    """Сдвиг значений на delta (результат должен оставаться в натуральных числах)"""
    values = finite_values(c)
    if values is not None:
        shifted = frozenset(x + delta for x in values)
        if any(x < 1 for x in shifted):
            return None
        return Equal(next(iter(shifted))) if len(shifted) == 1 else InFiniteSet(shifted)
    if isinstance(c, AnyValue):
        return AtLeast(1 + delta) if delta >= 0 else None
    if isinstance(c, AtLeast):
        return AtLeast(c.bound + delta) if c.bound + delta >= 1 else None
    return None
