# dotgraph/domain/service/dot_graph_builder.py
import logging
from itertools import combinations, product
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from dotgraph.domain.model.equivalence import EquivClass
from dotgraph.domain.model.errors import (
    InvalidParameterError,
    MembershipMissingError,
    QuotientSoundnessError,
    VertexCapExceededError,
)
from dotgraph.domain.model.graph import DotGraph
from dotgraph.domain.model.ring import Element, RingKind, RingSpec, Vector
from dotgraph.domain.service.ring_factory import make_modular_ring

DEFAULT_VERTEX_CAP = 20000
DEFAULT_BLOCK_SIZE = 512

PairMask = Callable[[np.ndarray, np.ndarray], np.ndarray]


class DotGraphBuilder:
    """
    Constructs dot product graphs over R = A^k and their scalar quotients.

    Adjacency is evaluated for all unordered vertex pairs with numpy, one
    block of rows at a time, against the vertices that follow the block.
    Every constructor checks the vertex count against the cap before it
    enumerates anything.
    """

    def __init__(self, vertex_cap: int = DEFAULT_VERTEX_CAP, block_size: int = DEFAULT_BLOCK_SIZE):
        """
        Initialize the builder.

        Args:
            vertex_cap: Largest vertex count a constructor will accept
            block_size: Rows per vectorised adjacency block
        """
        if vertex_cap < 1:
            raise InvalidParameterError(f"vertex cap must be positive, got {vertex_cap}")
        if block_size < 1:
            raise InvalidParameterError(f"block size must be positive, got {block_size}")
        self.vertex_cap = vertex_cap
        self.block_size = block_size
        self.logger = logging.getLogger(__name__)

    # Vectors

    @staticmethod
    def dot_product(ring: RingSpec, x: Sequence[Element], y: Sequence[Element]) -> Element:
        """
        Dot product of two vectors over the same ring.

        Raises:
            InvalidParameterError: If the lengths differ, are zero, or a coordinate is not canonical
        """
        if len(x) != len(y) or not x:
            raise InvalidParameterError(f"cannot dot vectors of lengths {len(x)} and {len(y)}")
        if not all(ring.is_canonical(c) for c in (*x, *y)):
            raise InvalidParameterError(f"coordinates of {x} or {y} are not elements of {ring.label}")
        return ring.dot(x, y)

    @staticmethod
    def normalize(ring: RingSpec, vector: Sequence[Element]) -> Vector:
        """Scale a vector by the inverse of its first unit coordinate."""
        for c in vector:
            if ring.is_unit(c):
                return ring.scale(ring.inverse(c), vector)
        return tuple(vector)

    def _check_cap(self, name: str, count: int) -> None:
        if count > self.vertex_cap:
            raise VertexCapExceededError(count, self.vertex_cap, name)

    @staticmethod
    def _check_arity(k: int) -> None:
        if k < 1:
            raise InvalidParameterError(f"arity k must be >= 1, got {k}")

    @staticmethod
    def _name(prefix: str, ring: RingSpec, k: int) -> str:
        return f"{prefix}({ring.label}^{k})"

    # Vertex-level constructors

    def build_td(self, ring: RingSpec, k: int = 2) -> DotGraph:
        """Total dot product graph: all nonzero vectors of A^k."""
        self._check_arity(k)
        name = self._name("TD", ring, k)
        self._check_cap(name, ring.order ** k - 1)
        vectors = [v for v in product(ring.elements(), repeat=k) if any(v)]
        return self._vector_graph(name, ring, vectors)

    def build_zd(self, ring: RingSpec, k: int = 2) -> DotGraph:
        """Zero-divisor dot product graph: nonzero vectors with a non-unit coordinate."""
        self._check_arity(k)
        name = self._name("ZD", ring, k)
        self._check_cap(name, ring.order ** k - len(ring.units()) ** k - 1)
        vectors = self._zero_divisor_vectors(ring, k)
        return self._vector_graph(name, ring, vectors)

    def build_ud(self, ring: RingSpec, k: int = 2) -> DotGraph:
        """Unit dot product graph: vectors whose coordinates are all units."""
        self._check_arity(k)
        name = self._name("UD", ring, k)
        units = ring.units()
        self._check_cap(name, len(units) ** k)
        vectors = list(product(units, repeat=k))
        return self._vector_graph(name, ring, vectors)

    def build_gamma(self, ring: RingSpec, k: int = 2) -> DotGraph:
        """
        Zero-divisor graph of the product ring A^k: same vertices as ZD,
        adjacent iff the componentwise product is the zero vector.
        """
        self._check_arity(k)
        name = self._name("Gamma", ring, k)
        self._check_cap(name, ring.order ** k - len(ring.units()) ** k - 1)
        vectors = self._zero_divisor_vectors(ring, k)
        return self._vector_graph(name, ring, vectors, self._annihilating_mask(ring))

    def build_zd_mixed(self, n: Union[int, RingSpec]) -> DotGraph:
        """
        Induced subgraph of ZD(Z_n x Z_n) on the vectors pairing a unit with a
        zero-divisor or 0, in either order.
        """
        ring = self._modular(n)
        name = self._name("ZD_mixed", ring, 2)
        units = len(ring.units())
        self._check_cap(name, 2 * units * (ring.order - units))
        return self._vector_graph(name, ring, self._mixed_vectors(ring))

    def build_induced(self, ring: RingSpec, vectors: Sequence[Vector], name: str) -> DotGraph:
        """Dot product graph induced on an explicit vertex list."""
        self._check_cap(name, len(vectors))
        return self._vector_graph(name, ring, list(vectors))

    # Quotients

    def build_eud(self, ring: RingSpec) -> DotGraph:
        """Quotient of UD(A x A) by diagonal unit scaling."""
        name = self._name("EUD", ring, 2)
        units = ring.units()
        self._check_cap(name, len(units) ** 2)
        return self._quotient(name, ring, list(product(units, repeat=2)))

    def build_ezd_mixed(self, n: Union[int, RingSpec]) -> DotGraph:
        """Quotient of the mixed unit/zero-divisor subgraph by diagonal unit scaling."""
        ring = self._modular(n)
        name = self._name("EZD_mixed", ring, 2)
        units = len(ring.units())
        self._check_cap(name, 2 * units * (ring.order - units))
        return self._quotient(name, ring, self._mixed_vectors(ring))

    def expand_equivalence(self, eg: DotGraph, ring: RingSpec, name: Optional[str] = None) -> DotGraph:
        """
        Recover the vertex-level graph from a quotient graph.

        Members of adjacent classes are joined when their dot product is zero;
        members of a self-orthogonal class are joined pairwise.

        Raises:
            MembershipMissingError: If a quotient vertex has no members
        """
        classes: List[EquivClass] = []
        for vertex in eg.vertices:
            if not isinstance(vertex, EquivClass) or not vertex.members:
                raise MembershipMissingError(f"vertex {vertex!r} of {eg.name} carries no class members")
            classes.append(vertex)

        vertices = sorted(member for cls in classes for member in cls.members)
        self._check_cap(name or eg.name, len(vertices))
        index = {v: i for i, v in enumerate(vertices)}
        edges: List[Tuple[int, int]] = []
        for cls in classes:
            if cls.self_orthogonal:
                edges.extend((index[u], index[w]) for u, w in combinations(cls.members, 2))
        for i, j in eg.edges():
            for u in classes[i].members:
                for w in classes[j].members:
                    if ring.dot(u, w) == 0:
                        edges.append((index[u], index[w]))

        expanded_name = name or f"expanded {eg.name}"
        graph = DotGraph.from_edges(expanded_name, vertices, edges, [ring.format_vector(v) for v in vertices])
        self.logger.info(f"Expanded {eg.name} into {graph.vertex_count} vertices, {graph.edge_count} edges")
        return graph

    # Internals

    @staticmethod
    def _modular(n: Union[int, RingSpec]) -> RingSpec:
        if isinstance(n, RingSpec):
            if n.kind is not RingKind.MODULAR:
                raise InvalidParameterError(f"mixed unit/zero-divisor graphs need Z_n, got {n.label}")
            return n
        return make_modular_ring(n)

    @staticmethod
    def _zero_divisor_vectors(ring: RingSpec, k: int) -> List[Vector]:
        mask = ring.unit_mask
        return [
            v for v in product(ring.elements(), repeat=k)
            if any(v) and not all(mask[c] for c in v)
        ]

    @staticmethod
    def _mixed_vectors(ring: RingSpec) -> List[Vector]:
        units = ring.units()
        zero_divisors = ring.zero_divisors()
        vectors = [(u, z) for u in units for z in zero_divisors]
        vectors += [(z, u) for z in zero_divisors for u in units]
        return sorted(vectors)

    @staticmethod
    def _orthogonal_mask(ring: RingSpec) -> PairMask:
        return lambda left, right: ring.dot_matrix(left, right) == 0

    @staticmethod
    def _annihilating_mask(ring: RingSpec) -> PairMask:
        def mask(left: np.ndarray, right: np.ndarray) -> np.ndarray:
            zero = np.ones((left.shape[0], right.shape[0]), dtype=bool)
            for i in range(left.shape[1]):
                zero &= ring.mul_array(left[:, None, i], right[None, :, i]) == 0
            return zero

        return mask

    def _pairs(self, vectors: Sequence[Vector], mask: PairMask) -> Tuple[np.ndarray, np.ndarray]:
        """
        Positions (i < j) of all vector pairs selected by the mask.
        """
        count = len(vectors)
        if count == 0:
            return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
        arr = np.asarray(vectors, dtype=np.int64).reshape(count, -1)
        rows_out, cols_out = [], []
        for start in range(0, count, self.block_size):
            stop = min(start + self.block_size, count)
            hits = mask(arr[start:stop], arr[start:])
            rows, cols = np.nonzero(hits)
            rows = rows + start
            cols = cols + start
            keep = cols > rows
            rows_out.append(rows[keep])
            cols_out.append(cols[keep])
        return np.concatenate(rows_out), np.concatenate(cols_out)

    def _vector_graph(
        self,
        name: str,
        ring: RingSpec,
        vectors: List[Vector],
        mask: Optional[PairMask] = None,
    ) -> DotGraph:
        rows, cols = self._pairs(vectors, mask or self._orthogonal_mask(ring))
        labels = [ring.format_vector(v) for v in vectors]
        graph = DotGraph.from_edges(name, vectors, zip(rows.tolist(), cols.tolist()), labels)
        self.logger.info(f"Built {name}: {graph.vertex_count} vertices, {graph.edge_count} edges")
        return graph

    def _quotient(self, name: str, ring: RingSpec, vectors: List[Vector]) -> DotGraph:
        """
        Group vectors into scalar classes and join two classes when every
        cross pair is orthogonal. The all-or-nothing behaviour of cross pairs
        is checked, not assumed.
        """
        unit_count = len(ring.units())
        groups: Dict[Vector, List[Vector]] = {}
        for v in vectors:
            groups.setdefault(self.normalize(ring, v), []).append(v)
        representatives = sorted(groups)

        position = {v: i for i, v in enumerate(vectors)}
        class_of = np.empty(len(vectors), dtype=np.int64)
        for c, rep in enumerate(representatives):
            members = groups[rep]
            if len(members) != unit_count:
                raise QuotientSoundnessError(
                    f"class of {ring.format_vector(rep)} in {name} has {len(members)} members, expected {unit_count}"
                )
            for v in members:
                class_of[position[v]] = c

        rows, cols = self._pairs(vectors, self._orthogonal_mask(ring))
        size = len(representatives)
        counts = np.zeros((size, size), dtype=np.int64)
        np.add.at(counts, (class_of[rows], class_of[cols]), 1)

        edges: List[Tuple[int, int]] = []
        for a in range(size):
            for b in range(a + 1, size):
                hits = int(counts[a, b] + counts[b, a])
                full = len(groups[representatives[a]]) * len(groups[representatives[b]])
                if hits == full:
                    edges.append((a, b))
                elif hits:
                    raise QuotientSoundnessError(
                        f"{name}: only {hits} of {full} pairs between "
                        f"{ring.format_vector(representatives[a])} and "
                        f"{ring.format_vector(representatives[b])} are orthogonal"
                    )

        classes = []
        for a, rep in enumerate(representatives):
            members = groups[rep]
            within = int(counts[a, a])
            full = len(members) * (len(members) - 1) // 2
            if within not in (0, full):
                raise QuotientSoundnessError(
                    f"{name}: class {ring.format_vector(rep)} is only partially self-orthogonal"
                )
            self_orthogonal = within == full if full > 0 else ring.dot(rep, rep) == 0
            classes.append(EquivClass(representative=rep, members=tuple(members), self_orthogonal=self_orthogonal))

        graph = DotGraph.from_edges(name, classes, edges, [cls.label(ring) for cls in classes])
        self.logger.info(f"Built {name}: {graph.vertex_count} classes, {graph.edge_count} edges")
        return graph
