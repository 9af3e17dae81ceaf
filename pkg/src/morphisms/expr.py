"""
Выражения над отображениями: имена, композиция, степени, обращение и β(i, j)
"""
from dataclasses import dataclass
from typing import Union as TypingUnion


@dataclass(frozen=True)
class Identity:
    def __str__(self) -> str:
        return "id"


@dataclass(frozen=True)
class Named:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Beta:
    """Перестановка копий H_i и H_j семейства чередующих автоморфизмов"""
    i: int
    j: int

    def __str__(self) -> str:
        return f"beta({self.i},{self.j})"


@dataclass(frozen=True)
class Compose:
    """outer ∘ inner: inner применяется первым"""
    outer: "MorphismExpr"
    inner: "MorphismExpr"

    def __str__(self) -> str:
        return format_expr(self)


@dataclass(frozen=True)
class Power:
    base: "MorphismExpr"
    k: int

    def __str__(self) -> str:
        return format_expr(self)


@dataclass(frozen=True)
class Inverse:
    base: "MorphismExpr"

    def __str__(self) -> str:
        return f"inv({format_expr(self.base)})"


MorphismExpr = TypingUnion[Identity, Named, Beta, Compose, Power, Inverse]


def compose(a: MorphismExpr, b: MorphismExpr) -> MorphismExpr:
    return Compose(a, b)


def power(a: MorphismExpr, k: int) -> MorphismExpr:
    """power(a, 0) = Identity, power(a, -1) = Inverse(a)"""
    if k == 0:
        return Identity()
    if k == 1:
        return a
    if k == -1:
        return Inverse(a)
    return Power(a, k)


def inverse(a: MorphismExpr) -> MorphismExpr:
    return Inverse(a)


def format_expr(expr: MorphismExpr) -> str:
    """Печать в грамматике командной строки: '*' левоассоциативна, '^' связывает сильнее"""
    if isinstance(expr, Compose):
        right = format_expr(expr.inner)
        if isinstance(expr.inner, Compose):
            right = f"({right})"
        return f"{format_expr(expr.outer)}*{right}"
    if isinstance(expr, Power):
        base = format_expr(expr.base)
        if isinstance(expr.base, Compose):
            base = f"({base})"
        return f"{base}^{expr.k}"
    return str(expr)
