# dotgraph/domain/port/service/graph_exporter.py
from abc import ABC, abstractmethod
from typing import Optional, TextIO

from dotgraph.domain.model.graph import DotGraph


class GraphExporter(ABC):
    """
    Port (interface) for serializing graphs to a text format.
    """

    @abstractmethod
    def render(self, graph: DotGraph) -> str:
        """
        Render a graph.

        Args:
            graph: The graph to render

        Returns:
            The serialized graph; identical graphs give identical text
        """
        pass

    @abstractmethod
    def export(self, graph: DotGraph, sink: Optional[TextIO] = None) -> str:
        """
        Render a graph and write it to a sink.

        Args:
            graph: The graph to export
            sink: Writable text stream; nothing is written when None

        Returns:
            The serialized graph
        """
        pass
