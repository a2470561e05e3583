# dotgraph/domain/service/graph_analysis.py
"""
Component extraction and shape classification for DotGraph.
"""
from itertools import combinations
from typing import Callable, Hashable, List, Optional, Sequence

import networkx as nx
from networkx.algorithms import bipartite

from dotgraph.domain.model.graph import ComponentShape, DotGraph, Signature


def build_graph(
    vertices: Sequence[Hashable],
    adjacency: Callable[[Hashable, Hashable], bool],
    labels: Optional[Sequence[str]] = None,
    name: str = "G",
) -> DotGraph:
    """
    Build a graph by evaluating a symmetric predicate on every unordered pair.

    Args:
        vertices: Distinct vertices in canonical order
        adjacency: Pure, symmetric predicate; never called with x == y
        labels: Optional display strings
        name: Display name

    Returns:
        Graph with exactly the pairs where the predicate holds
    """
    edges = [
        (i, j)
        for (i, x), (j, y) in combinations(enumerate(vertices), 2)
        if adjacency(x, y)
    ]
    return DotGraph.from_edges(name, vertices, edges, labels)


def components(g: DotGraph) -> List[List[int]]:
    """
    Connected components as sorted lists of vertex positions, ordered by smallest vertex.
    """
    parts = [sorted(part) for part in nx.connected_components(g.graph)]
    parts.sort(key=lambda part: part[0])
    return parts


def classify_component(g: DotGraph, component: Sequence[int]) -> ComponentShape:
    """
    Classify one connected component.

    Complete is tested first, so K_2 reports Complete(2). A component is
    CompleteBipartite when its 2-colouring has every cross pair as an edge.

    Args:
        g: The graph
        component: Vertex positions of a connected component of g

    Returns:
        The component's shape in normal form
    """
    sub = g.graph.subgraph(component)
    t = sub.number_of_nodes()
    e = sub.number_of_edges()
    if e == t * (t - 1) // 2:
        shape = ComponentShape.complete(t)
    elif bipartite.is_bipartite(sub):
        left, right = bipartite.sets(sub)
        if e == len(left) * len(right):
            shape = ComponentShape.complete_bipartite(len(left), len(right))
        else:
            shape = ComponentShape.other(t, e, (d for _, d in sub.degree()))
    else:
        shape = ComponentShape.other(t, e, (d for _, d in sub.degree()))
    assert shape.vertex_count == t and shape.edge_count == e, f"{shape} does not fit {t} vertices, {e} edges"
    return shape


def signature(g: DotGraph) -> Signature:
    sig = Signature.from_shapes(classify_component(g, part) for part in components(g))
    assert sig.vertex_count == g.vertex_count
    return sig


def is_totally_disconnected(g: DotGraph) -> bool:
    return g.edge_count == 0


def is_connected(g: DotGraph) -> bool:
    """Exactly one component; the empty graph counts as connected."""
    if g.vertex_count == 0:
        return True
    return nx.is_connected(g.graph)
