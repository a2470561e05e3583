# dotgraph/infrastructure/service/dot_exporter.py
import logging
from typing import Optional, TextIO

from dotgraph.domain.model.graph import DotGraph
from dotgraph.domain.port.service.graph_exporter import GraphExporter


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


class DotExporter(GraphExporter):
    """
    GraphViz DOT implementation of the GraphExporter interface.

    Output is bit-exact for a given graph: one node line per vertex in
    canonical order, then one edge line per edge sorted by endpoint
    positions, two-space indentation, trailing newline.
    """

    def __init__(self, indent: str = "  "):
        self.indent = indent
        self.logger = logging.getLogger(__name__)

    def render(self, graph: DotGraph) -> str:
        lines = ["graph {"]
        lines.extend(f"{self.indent}{_quote(label)};" for label in graph.labels)
        lines.extend(
            f"{self.indent}{_quote(graph.labels[i])} -- {_quote(graph.labels[j])};"
            for i, j in graph.edges()
        )
        lines.append("}")
        return "\n".join(lines) + "\n"

    def export(self, graph: DotGraph, sink: Optional[TextIO] = None) -> str:
        text = self.render(graph)
        if sink is not None:
            sink.write(text)
            self.logger.debug(f"Wrote DOT for {graph.name}: {graph.vertex_count} nodes, {graph.edge_count} edges")
        return text
