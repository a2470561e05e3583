# dotgraph/application/service/graph_service.py
import logging
from typing import Optional, TextIO, Union

from dotgraph.application.dto.graph_dto import BuildResultDTO
from dotgraph.domain.model.errors import InvalidParameterError
from dotgraph.domain.model.graph import DotGraph
from dotgraph.domain.model.prediction import GraphKind
from dotgraph.domain.model.ring import RingRequest, RingSpec
from dotgraph.domain.port.service.graph_exporter import GraphExporter
from dotgraph.domain.service import graph_analysis
from dotgraph.domain.service.dot_graph_builder import DotGraphBuilder
from dotgraph.domain.service.ring_factory import make_ring


class GraphService:
    """
    Application service for building, describing and exporting dot product graphs.
    """

    def __init__(self, builder: DotGraphBuilder, exporter: Optional[GraphExporter] = None):
        """
        Initialize the service with dependencies.

        Args:
            builder: Constructor of vertex-level and quotient graphs
            exporter: Serializer used for DOT output; optional for verification-only use
        """
        self.builder = builder
        self.exporter = exporter
        self.logger = logging.getLogger(__name__)

    @staticmethod
    def resolve_ring(ring: Union[RingSpec, RingRequest, str]) -> RingSpec:
        if isinstance(ring, RingSpec):
            return ring
        return make_ring(ring)

    def build(self, ring: Union[RingSpec, RingRequest, str], kind: GraphKind, k: int = 2) -> DotGraph:
        """
        Build one graph of the given family.

        Args:
            ring: Base ring A or its request
            kind: Graph family
            k: Arity of R = A^k

        Returns:
            The constructed graph

        Raises:
            InvalidParameterError: If the family does not accept this ring or arity
            VertexCapExceededError: If the graph would exceed the vertex cap
        """
        ring = self.resolve_ring(ring)
        if (kind.is_quotient or kind is GraphKind.ZD_MIXED) and k != 2:
            raise InvalidParameterError(f"{kind.value} is defined for k = 2 only, got k = {k}")

        if kind is GraphKind.TD:
            return self.builder.build_td(ring, k)
        if kind is GraphKind.ZD:
            return self.builder.build_zd(ring, k)
        if kind is GraphKind.UD:
            return self.builder.build_ud(ring, k)
        if kind is GraphKind.GAMMA:
            return self.builder.build_gamma(ring, k)
        if kind is GraphKind.ZD_MIXED:
            return self.builder.build_zd_mixed(ring)
        if kind is GraphKind.EUD:
            return self.builder.build_eud(ring)
        return self.builder.build_ezd_mixed(ring)

    def expand(self, quotient: DotGraph, ring: Union[RingSpec, RingRequest, str]) -> DotGraph:
        return self.builder.expand_equivalence(quotient, self.resolve_ring(ring))

    def describe(
        self,
        graph: DotGraph,
        ring: RingSpec,
        kind: GraphKind,
        k: int = 2,
        include_dot: bool = False,
    ) -> BuildResultDTO:
        """
        Decompose a graph into its signature and connectivity facts.
        """
        sig = graph_analysis.signature(graph)
        return BuildResultDTO(
            name=graph.name,
            ring=ring.label,
            graph=kind.value,
            arity=k,
            vertex_count=graph.vertex_count,
            edge_count=graph.edge_count,
            signature=sig,
            connected=graph_analysis.is_connected(graph),
            totally_disconnected=graph_analysis.is_totally_disconnected(graph),
            dot=self._exporter().render(graph) if include_dot else None,
        )

    def build_result(
        self,
        ring: Union[RingSpec, RingRequest, str],
        kind: GraphKind,
        k: int = 2,
        include_dot: bool = False,
    ) -> BuildResultDTO:
        """
        Build a graph and describe it.

        Args:
            ring: Base ring A or its request
            kind: Graph family
            k: Arity
            include_dot: Attach the DOT rendering to the result

        Returns:
            DTO with counts, signature and connectivity
        """
        ring = self.resolve_ring(ring)
        graph = self.build(ring, kind, k)
        result = self.describe(graph, ring, kind, k, include_dot)
        self.logger.info(f"{result.name}: {result.signature}")
        return result

    def export(self, graph: DotGraph, sink: Optional[TextIO] = None) -> str:
        return self._exporter().export(graph, sink)

    def _exporter(self) -> GraphExporter:
        if self.exporter is None:
            raise RuntimeError("GraphService was created without an exporter")
        return self.exporter
