"""
Конечные окна бесконечных графов: индуцированный подграф на первых n вершинах перечисления
"""
from enum import Enum
from typing import List, Tuple

import networkx as nx
from pydantic import BaseModel

from .presentation import GraphPresentation
from .vertex import VertexId


class Window(BaseModel):
    """Окно графа: вершины в порядке перечисления и рёбра как пары индексов (i < j)"""
    family_id: str
    size: int
    vertices: List[VertexId]
    edges: List[Tuple[int, int]]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self.vertices)))
        graph.add_edges_from(self.edges)
        return graph


class Connectivity(str, Enum):
    CONNECTED = "connected"
    DISCONNECTED = "disconnected"
    VACUOUS = "vacuous"


def window(G: GraphPresentation, n: int) -> Window:
    """
    Окно размера n.

    Raises:
        ValueError: если n < 1
    """
    if n < 1:
        raise ValueError(f"window size must be >= 1, got {n}")
    vertices = G.vertices(n)
    edges = [
        (i, j)
        for i in range(len(vertices))
        for j in range(i + 1, len(vertices))
        if G.adjacency(vertices[i], vertices[j])
    ]
    return Window(family_id=G.family_id, size=n, vertices=vertices, edges=edges)


def connected_window(G: GraphPresentation, n: int) -> Connectivity:
    """Связность окна размера n; окно из не более чем одной вершины считается вырожденным"""
    if n <= 1:
        return Connectivity.VACUOUS
    observed = window(G, n)
    if len(observed.vertices) <= 1:
        return Connectivity.VACUOUS
    if nx.is_connected(observed.to_networkx()):
        return Connectivity.CONNECTED
    return Connectivity.DISCONNECTED
