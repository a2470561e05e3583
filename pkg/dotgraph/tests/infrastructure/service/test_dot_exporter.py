import io
import re
import unittest

from dotgraph.domain.model.graph import DotGraph
from dotgraph.domain.port.service.graph_exporter import GraphExporter
from dotgraph.domain.service.dot_graph_builder import DotGraphBuilder
from dotgraph.domain.service.ring_factory import make_modular_ring
from dotgraph.infrastructure.service.dot_exporter import DotExporter


class TestDotExporter(unittest.TestCase):
    """Test cases for the DotExporter."""

    def setUp(self):
        self.exporter = DotExporter()

    def test_implements_exporter_interface(self):
        self.assertIsInstance(self.exporter, GraphExporter)

    def test_single_edge(self):
        graph = DotGraph.from_edges("K_2", ["a", "b"], [(0, 1)])
        self.assertEqual(self.exporter.render(graph), 'graph {\n  "a";\n  "b";\n  "a" -- "b";\n}\n')

    def test_empty_graph(self):
        graph = DotGraph.from_edges("empty", [], [])
        self.assertEqual(self.exporter.render(graph), "graph {\n}\n")

    def test_quoting(self):
        graph = DotGraph.from_edges("quotes", ['say "hi"'], [])
        self.assertEqual(self.exporter.render(graph), 'graph {\n  "say \\"hi\\"";\n}\n')

    def test_edges_are_sorted(self):
        graph = DotGraph.from_edges("order", ["x", "y", "z"], [(2, 1), (1, 0), (2, 0)])
        lines = self.exporter.render(graph).splitlines()
        self.assertEqual(lines[4:7], ['  "x" -- "y";', '  "x" -- "z";', '  "y" -- "z";'])

    def test_unit_graph_counts(self):
        """UD(Z_5^2) renders 16 node lines and 28 edge lines."""
        # Arrange
        graph = DotGraphBuilder().build_ud(make_modular_ring(5))
        sink = io.StringIO()

        # Act
        text = self.exporter.export(graph, sink)

        # Assert
        self.assertEqual(sink.getvalue(), text)
        lines = text.splitlines()
        self.assertEqual(len([line for line in lines if re.fullmatch(r'  "[^"]*";', line)]), 16)
        self.assertEqual(len([line for line in lines if " -- " in line]), 28)
        self.assertIn('  "(1, 2)" -- "(2, 4)";', lines)

    def test_render_is_deterministic(self):
        builder = DotGraphBuilder(block_size=5)
        first = self.exporter.render(builder.build_td(make_modular_ring(4)))
        second = self.exporter.render(DotGraphBuilder(block_size=100).build_td(make_modular_ring(4)))
        self.assertEqual(first, second)


if __name__ == '__main__':
    unittest.main()
