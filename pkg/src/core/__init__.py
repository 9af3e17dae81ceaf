"""
Ядро: вершины, задания графов, алгебра подмножеств и окна
"""
from .vertex import VertexId, vertex, format_vertex, parse_vertex
from .constraints import AnyValue, AtLeast, Equal, InFiniteSet, PowersOf, PrimePowerOfNthPrime
from .subgraph_spec import (
    CoordSet,
    Difference,
    Finite,
    Image,
    NormalForm,
    SetVerdict,
    SubgraphSpec,
    Union,
    finite,
    image_spec,
    normalize,
    spec_contains,
    spec_disjoint,
)
from .presentation import GraphPresentation, as_vertex, remove
from .window import Connectivity, Window, connected_window, window

__all__ = [
    "VertexId", "vertex", "format_vertex", "parse_vertex",
    "AnyValue", "AtLeast", "Equal", "InFiniteSet", "PowersOf", "PrimePowerOfNthPrime",
    "CoordSet", "Difference", "Finite", "Image", "NormalForm", "SetVerdict", "SubgraphSpec", "Union",
    "finite", "image_spec", "normalize", "spec_contains", "spec_disjoint",
    "GraphPresentation", "as_vertex", "remove",
    "Connectivity", "Window", "connected_window", "window",
]
