"""
Аргументы-подмножества командной строки: имя из реестра, union(...) и image(EXPR, NAME)
"""
from typing import List

from ..core.subgraph_spec import SubgraphSpec, Union, image_spec
from ..families.bundle import FamilyBundle
from ..services.errors import GrammarError
from .grammar import parse_morphism


def _split_top_level(body: str, source: str, offset: int) -> List[str]:
    """Разделить по запятым верхнего уровня"""
    parts: List[str] = []
    depth = 0
    start = 0
    for index, char in enumerate(body):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise GrammarError("unbalanced ')'", offset + index + 1, source)
        elif char == "," and depth == 0:
            parts.append(body[start:index])
            start = index + 1
    if depth != 0:
        raise GrammarError("unbalanced '('", offset + len(body) + 1, source)
    parts.append(body[start:])
    return parts


def parse_spec(text: str, bundle: FamilyBundle, source: str = "", offset: int = 0) -> SubgraphSpec:
    """
    Разобрать аргумент-подмножество.

    Raises:
        GrammarError: синтаксическая ошибка
        UnknownNameError: неизвестное имя подмножества или отображения
    """
    source = source or text
    stripped = text.strip()
    offset += len(text) - len(text.lstrip())
    for keyword in ("union", "image"):
        if stripped.startswith(f"{keyword}("):
            if not stripped.endswith(")"):
                raise GrammarError(f"'{keyword}(' is not closed", offset + len(stripped) + 1, source)
            inner_offset = offset + len(keyword) + 1
            body = stripped[len(keyword) + 1:-1]
            parts = _split_top_level(body, source, inner_offset)
            if keyword == "union":
                specs = []
                position = inner_offset
                for part in parts:
                    specs.append(parse_spec(part, bundle, source, position))
                    position += len(part) + 1
                return Union(tuple(specs))
            if len(parts) < 2:
                raise GrammarError("image needs an expression and a subgraph name", inner_offset + 1, source)
            expr_text = ",".join(parts[:-1])
            expr = parse_morphism(expr_text, bundle.env.names.keys())
            base = parse_spec(parts[-1], bundle, source, inner_offset + len(expr_text) + 1)
            return image_spec(bundle.env.evaluate(expr), base)
    return bundle.spec(stripped)
