# dotgraph/domain/model/graph.py
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from dotgraph.domain.model.errors import InvalidParameterError


class ShapeKind(str, Enum):
    COMPLETE = "K_t"
    COMPLETE_BIPARTITE = "K_{s,t}"
    OTHER = "other"


_KIND_ORDER = {ShapeKind.COMPLETE: 0, ShapeKind.COMPLETE_BIPARTITE: 1, ShapeKind.OTHER: 2}


@dataclass(frozen=True)
class ComponentShape:
    """
    Canonical label of one connected component.

    Complete(t) stores (t,), CompleteBipartite(s, t) stores (s, t) with
    s <= t, Other stores (vertex_count, edge_count) plus its sorted degrees.
    K_{1,1} is the same graph as K_2 and is always written Complete(2).
    """

    kind: ShapeKind
    sizes: Tuple[int, ...]
    degrees: Tuple[int, ...] = ()

    @classmethod
    def complete(cls, t: int) -> 'ComponentShape':
        if t < 1:
            raise InvalidParameterError(f"K_t needs t >= 1, got {t}")
        return cls(kind=ShapeKind.COMPLETE, sizes=(t,))

    @classmethod
    def complete_bipartite(cls, s: int, t: int) -> 'ComponentShape':
        """Normal form of K_{s,t}: parts sorted, K_{1,1} folded into K_2."""
        s, t = sorted((s, t))
        if s < 1:
            raise InvalidParameterError(f"K_{{s,t}} needs both parts nonempty, got ({s}, {t})")
        if (s, t) == (1, 1):
            return cls.complete(2)
        return cls(kind=ShapeKind.COMPLETE_BIPARTITE, sizes=(s, t))

    @classmethod
    def other(cls, vertex_count: int, edge_count: int, degrees: Iterable[int]) -> 'ComponentShape':
        return cls(kind=ShapeKind.OTHER, sizes=(vertex_count, edge_count), degrees=tuple(sorted(degrees)))

    @property
    def vertex_count(self) -> int:
        if self.kind is ShapeKind.COMPLETE_BIPARTITE:
            return self.sizes[0] + self.sizes[1]
        return self.sizes[0]

    @property
    def edge_count(self) -> int:
        if self.kind is ShapeKind.COMPLETE:
            t = self.sizes[0]
            return t * (t - 1) // 2
        if self.kind is ShapeKind.COMPLETE_BIPARTITE:
            return self.sizes[0] * self.sizes[1]
        return self.sizes[1]

    def sort_key(self) -> Tuple[Any, ...]:
        return (_KIND_ORDER[self.kind], self.sizes, self.degrees)

    def __lt__(self, other: 'ComponentShape') -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.kind is ShapeKind.COMPLETE:
            return f"K_{self.sizes[0]}"
        if self.kind is ShapeKind.COMPLETE_BIPARTITE:
            return f"K_{{{self.sizes[0]},{self.sizes[1]}}}"
        return f"Other(V={self.sizes[0]}, E={self.sizes[1]})"

    def to_dict(self) -> Dict[str, Any]:
        if self.kind is ShapeKind.COMPLETE:
            return {"shape": self.kind.value, "t": self.sizes[0]}
        if self.kind is ShapeKind.COMPLETE_BIPARTITE:
            return {"shape": self.kind.value, "s": self.sizes[0], "t": self.sizes[1]}
        return {
            "shape": self.kind.value,
            "vertices": self.sizes[0],
            "edges": self.sizes[1],
            "degrees": list(self.degrees),
        }


@dataclass(frozen=True)
class Signature:
    """
    Multiset of component shapes, sorted canonically.
    """

    counts: Tuple[Tuple[ComponentShape, int], ...] = ()

    @classmethod
    def from_shapes(cls, shapes: Iterable[ComponentShape]) -> 'Signature':
        tally = Counter(shapes)
        return cls(counts=tuple(sorted(tally.items(), key=lambda item: item[0].sort_key())))

    @classmethod
    def of(cls, *pairs: Tuple[ComponentShape, int]) -> 'Signature':
        """Build from (shape, multiplicity) pairs; zero multiplicities are dropped."""
        tally: Counter = Counter()
        for shape, count in pairs:
            if count < 0:
                raise InvalidParameterError(f"negative multiplicity {count} for {shape}")
            if count:
                tally[shape] += count
        return cls(counts=tuple(sorted(tally.items(), key=lambda item: item[0].sort_key())))

    @property
    def vertex_count(self) -> int:
        return sum(shape.vertex_count * count for shape, count in self.counts)

    @property
    def edge_count(self) -> int:
        return sum(shape.edge_count * count for shape, count in self.counts)

    @property
    def component_count(self) -> int:
        return sum(count for _, count in self.counts)

    def count(self, shape: ComponentShape) -> int:
        return dict(self.counts).get(shape, 0)

    def diff(self, observed: 'Signature') -> Dict[str, Tuple[int, int]]:
        """
        Shapes whose multiplicity differs.

        Args:
            observed: Signature to compare against this (expected) one

        Returns:
            Mapping shape label -> (expected count, observed count)
        """
        expected_counts = dict(self.counts)
        observed_counts = dict(observed.counts)
        shapes = sorted(set(expected_counts) | set(observed_counts), key=ComponentShape.sort_key)
        return {
            str(shape): (expected_counts.get(shape, 0), observed_counts.get(shape, 0))
            for shape in shapes
            if expected_counts.get(shape, 0) != observed_counts.get(shape, 0)
        }

    def to_list(self) -> List[Dict[str, Any]]:
        return [dict(shape.to_dict(), count=count) for shape, count in self.counts]

    @classmethod
    def from_list(cls, data: Sequence[Dict[str, Any]]) -> 'Signature':
        pairs = []
        for item in data:
            kind = ShapeKind(item["shape"])
            if kind is ShapeKind.COMPLETE:
                shape = ComponentShape.complete(item["t"])
            elif kind is ShapeKind.COMPLETE_BIPARTITE:
                shape = ComponentShape.complete_bipartite(item["s"], item["t"])
            else:
                shape = ComponentShape.other(item["vertices"], item["edges"], item.get("degrees", []))
            pairs.append((shape, item.get("count", 1)))
        return cls.of(*pairs)

    def __str__(self) -> str:
        if not self.counts:
            return "∅"
        return " ⊔ ".join(f"{count} × {shape}" for shape, count in self.counts)


@dataclass(eq=False)
class DotGraph:
    """
    Simple undirected graph with an ordered vertex list.

    Vertices are arbitrary hashable payloads (coordinate tuples, scalar
    classes); internally the networkx graph uses their positions 0..N-1,
    so position order is the canonical order. The networkx graph is frozen
    after construction.
    """

    name: str
    vertices: Tuple[Hashable, ...]
    labels: Tuple[str, ...]
    graph: nx.Graph = field(repr=False)
    _index: Dict[Hashable, int] = field(default_factory=dict, repr=False)

    @classmethod
    def from_edges(
        cls,
        name: str,
        vertices: Sequence[Hashable],
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ) -> 'DotGraph':
        """
        Build a graph from vertex positions.

        Args:
            name: Display name
            vertices: Vertex payloads in canonical order, pairwise distinct
            edges: Pairs of vertex positions
            labels: Display strings, one per vertex (str(vertex) by default)

        Returns:
            The frozen graph

        Raises:
            InvalidParameterError: On self-loops, dangling endpoints or duplicate vertices
        """
        vertices = tuple(vertices)
        labels = tuple(labels) if labels is not None else tuple(str(v) for v in vertices)
        if len(labels) != len(vertices):
            raise InvalidParameterError("one label per vertex is required")
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise InvalidParameterError(f"duplicate vertices in {name}")

        g = nx.Graph()
        g.add_nodes_from(range(len(vertices)))
        count = len(vertices)
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j:
                raise InvalidParameterError(f"self-loop at vertex {labels[i]} in {name}")
            if not (0 <= i < count and 0 <= j < count):
                raise InvalidParameterError(f"edge ({i}, {j}) leaves the vertex set of {name}")
            g.add_edge(i, j)
        return cls(name=name, vertices=vertices, labels=labels, graph=nx.freeze(g), _index=index)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return self.graph.number_of_edges()

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as sorted position pairs (i < j), in lexicographic order."""
        return sorted((min(i, j), max(i, j)) for i, j in self.graph.edges())

    def index_of(self, vertex: Hashable) -> int:
        return self._index[vertex]

    def has_edge(self, u: Hashable, v: Hashable) -> bool:
        return self.graph.has_edge(self._index[u], self._index[v])

    def neighbors(self, vertex: Hashable) -> List[Hashable]:
        return [self.vertices[j] for j in sorted(self.graph.neighbors(self._index[vertex]))]

    def degree(self, vertex: Hashable) -> int:
        return self.graph.degree(self._index[vertex])

    def edge_set(self) -> Set[FrozenSet[Hashable]]:
        """Edges as unordered payload pairs, independent of vertex order."""
        return {frozenset((self.vertices[i], self.vertices[j])) for i, j in self.graph.edges()}

    def same_structure(self, other: 'DotGraph') -> bool:
        """Same vertex payloads and same edges, whatever the vertex order."""
        return set(self.vertices) == set(other.vertices) and self.edge_set() == other.edge_set()

    def __repr__(self) -> str:
        return f"DotGraph(name={self.name!r}, vertices={self.vertex_count}, edges={self.edge_count})"
