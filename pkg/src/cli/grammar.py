"""
Разбор выражений над отображениями.

    expr  := term ('*' term)*            композиция, левоассоциативна, левый операнд внешний
    term  := atom ('^' INT)*             степень связывает сильнее композиции
    atom  := 'id' | 'beta' '(' INT ',' INT ')' | 'inv' '(' expr ')' | NAME | '(' expr ')'
    INT   := '-'? DIGITS
"""
import re
from dataclasses import dataclass
from typing import Iterable, List, Optional

from ..morphisms.expr import Beta, Compose, Identity, Inverse, MorphismExpr, Named, Power, format_expr
from ..services.errors import GrammarError, UnknownNameError

KEYWORDS = {"id", "beta", "inv"}

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[*^(),]))")


@dataclass(frozen=True)
class Token:
    kind: str  # int | name | op | end
    text: str
    column: int


def tokenize(src: str) -> List[Token]:
    """Разбить строку на лексемы (колонки с единицы)"""
    tokens: List[Token] = []
    position = 0
    while position < len(src):
        if src[position:].strip() == "":
            break
        match = _TOKEN.match(src, position)
        if match is None or match.end() == position:
            column = position + 1 + (len(src[position:]) - len(src[position:].lstrip()))
            raise GrammarError(f"unexpected character {src[column - 1]!r}", column, src)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append(Token(kind, match.group(kind), start + 1))
        position = match.end()
    tokens.append(Token("end", "", len(src) + 1))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def fail(self, message: str, token: Optional[Token] = None) -> GrammarError:
        token = token or self.current
        found = "end of input" if token.kind == "end" else repr(token.text)
        return GrammarError(f"{message}, found {found}", token.column, self.src)

    def expect_op(self, op: str) -> None:
        if self.current.kind != "op" or self.current.text != op:
            raise self.fail(f"expected '{op}'")
        self.advance()

    def expect_int(self) -> int:
        if self.current.kind != "int":
            raise self.fail("expected integer")
        return int(self.advance().text)

    def expr(self) -> MorphismExpr:
        result = self.term()
        while self.current.kind == "op" and self.current.text == "*":
            self.advance()
            result = Compose(result, self.term())
        return result

    def term(self) -> MorphismExpr:
        result = self.atom()
        while self.current.kind == "op" and self.current.text == "^":
            self.advance()
            result = Power(result, self.expect_int())
        return result

    def atom(self) -> MorphismExpr:
        token = self.current
        if token.kind == "name":
            self.advance()
            if token.text == "id":
                return Identity()
            if token.text == "beta":
                self.expect_op("(")
                i = self.expect_int()
                self.expect_op(",")
                j = self.expect_int()
                self.expect_op(")")
                return Beta(i, j)
            if token.text == "inv":
                self.expect_op("(")
                inner = self.expr()
                self.expect_op(")")
                return Inverse(inner)
            return Named(token.text)
        if token.kind == "op" and token.text == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise self.fail("expected map name, 'id', 'beta(i,j)', 'inv(...)' or '('")

    def parse(self) -> MorphismExpr:
        result = self.expr()
        if self.current.kind != "end":
            raise self.fail("unexpected trailing input")
        return result


def names_in(expr: MorphismExpr) -> List[str]:
    """Имена отображений, встречающиеся в выражении"""
    if isinstance(expr, Named):
        return [expr.name]
    if isinstance(expr, Compose):
        return names_in(expr.outer) + names_in(expr.inner)
    if isinstance(expr, (Power, Inverse)):
        return names_in(expr.base)
    return []


def parse_morphism(src: str, available: Optional[Iterable[str]] = None) -> MorphismExpr:
    """
    Разобрать выражение.

    Args:
        src: Строка выражения
        available: Если задано, все имена должны быть из этого набора

    Raises:
        GrammarError: синтаксическая ошибка с колонкой
        UnknownNameError: неизвестное имя (со списком доступных)
    """
    expr = _Parser(src).parse()
    if available is not None:
        known = set(available)
        for name in names_in(expr):
            if name not in known:
                raise UnknownNameError(name, known, kind="map")
    return expr


def print_morphism(expr: MorphismExpr) -> str:
    return format_expr(expr)
