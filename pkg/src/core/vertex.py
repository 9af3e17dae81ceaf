"""
Имена вершин бесконечных графов
"""
import re
from typing import NamedTuple, Tuple

from ..services.errors import GrammarError


class VertexId(NamedTuple):
    """Вершина: короткий тег и кортеж натуральных координат (сравнение лексикографическое)"""
    tag: str
    coords: Tuple[int, ...] = ()

    def __str__(self) -> str:
        return format_vertex(self)


def vertex(tag: str, *coords: int) -> VertexId:
    """Удобный конструктор: vertex("a", 1, 8)"""
    return VertexId(tag, tuple(coords))


def format_vertex(v: VertexId) -> str:
    """Строковая форма "tag(c1,c2,...)" для экспорта"""
    return f"{v.tag}({','.join(str(c) for c in v.coords)})"


_VERTEX_PATTERN = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\(\s*([0-9,\s]*)\))?\s*$")


def parse_vertex(text: str) -> VertexId:
    """
    Разбор строки "tag(c1,c2)" или "tag" обратно в VertexId

    Raises:
        GrammarError: если строка не является записью вершины
    """
    match = _VERTEX_PATTERN.match(text)
    if not match:
        raise GrammarError("malformed vertex", 1, text)
    tag, body = match.group(1), match.group(2)
    if body is None or body.strip() == "":
        return VertexId(tag, ())
    try:
        coords = tuple(int(part) for part in body.split(","))
    except ValueError:
        raise GrammarError("malformed vertex coordinates", text.find("(") + 2, text)
    return VertexId(tag, coords)
