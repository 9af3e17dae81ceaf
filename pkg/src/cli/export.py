"""
Экспорт окон в DOT и JSON; импорт JSON обратно в Window
"""
import json
from typing import Any, Dict

from ..core.vertex import VertexId, format_vertex
from ..core.window import Window


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def window_to_dot(w: Window) -> str:
    """Неориентированный граф: узлы "tag(c1,...)" в порядке перечисления, рёбра по парам индексов"""
    lines = [f"graph {_quote(w.family_id)} {{"]
    names = [_quote(format_vertex(v)) for v in w.vertices]
    for name in names:
        lines.append(f"  {name};")
    for i, j in sorted(w.edges):
        lines.append(f"  {names[i]} -- {names[j]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def window_to_dict(w: Window) -> Dict[str, Any]:
    return {
        "family": w.family_id,
        "window": w.size,
        "vertices": [{"tag": v.tag, "coords": list(v.coords)} for v in w.vertices],
        "edges": [[i, j] for i, j in sorted(w.edges)],
    }


def window_to_json(w: Window) -> str:
    return json.dumps(window_to_dict(w), ensure_ascii=False, indent=2) + "\n"


def window_from_json(text: str) -> Window:
    """
    Обратный импорт JSON-экспорта.

    Raises:
        ValueError: некорректный документ (включая ошибки валидации pydantic)
    """
    data = json.loads(text)
    return Window(
        family_id=data["family"],
        size=data["window"],
        vertices=[VertexId(item["tag"], tuple(item["coords"])) for item in data["vertices"]],
        edges=[(i, j) for i, j in data["edges"]],
    )
