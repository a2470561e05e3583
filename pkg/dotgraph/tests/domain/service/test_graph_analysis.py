import unittest
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dotgraph.domain.model.graph import ComponentShape, DotGraph, Signature
from dotgraph.domain.service.graph_analysis import (
    build_graph,
    classify_component,
    components,
    is_connected,
    is_totally_disconnected,
    signature,
)


def complete_graph(t: int, offset: int = 0):
    vertices = list(range(offset, offset + t))
    return vertices, [(i, j) for i, j in combinations(range(t), 2)]


def complete_bipartite_graph(s: int, t: int):
    edges = [(i, s + j) for i in range(s) for j in range(t)]
    return list(range(s + t)), edges


class TestClassification(unittest.TestCase):
    """Test cases for component shape classification."""

    def test_complete_graphs(self):
        for t in range(1, 13):
            with self.subTest(t=t):
                vertices, edges = complete_graph(t)
                g = DotGraph.from_edges(f"K_{t}", vertices, edges)
                self.assertEqual(signature(g), Signature.of((ComponentShape.complete(t), 1)))

    def test_complete_bipartite_graphs(self):
        for s, t in [(1, 2), (2, 2), (2, 5), (4, 4), (3, 7)]:
            with self.subTest(s=s, t=t):
                vertices, edges = complete_bipartite_graph(s, t)
                g = DotGraph.from_edges("K_st", vertices, edges)
                self.assertEqual(signature(g), Signature.of((ComponentShape.complete_bipartite(s, t), 1)))

    def test_single_edge_reports_complete(self):
        g = DotGraph.from_edges("edge", ["a", "b"], [(0, 1)])
        self.assertEqual(classify_component(g, [0, 1]), ComponentShape.complete(2))

    def test_three_path_is_a_star(self):
        g = DotGraph.from_edges("P3", ["a", "b", "c"], [(0, 1), (1, 2)])
        self.assertEqual(str(signature(g)), "1 × K_{1,2}")

    def test_four_path_is_other(self):
        g = DotGraph.from_edges("P4", ["a", "b", "c", "d"], [(0, 1), (1, 2), (2, 3)])
        shape = classify_component(g, [0, 1, 2, 3])
        self.assertEqual(shape, ComponentShape.other(4, 3, [1, 1, 2, 2]))

    def test_odd_cycle_is_other(self):
        g = DotGraph.from_edges("C5", list(range(5)), [(i, (i + 1) % 5) for i in range(5)])
        self.assertEqual(str(signature(g)), "1 × Other(V=5, E=5)")

    def test_mixed_components(self):
        edges = [(0, 1), (0, 2), (1, 2), (3, 4)]
        g = DotGraph.from_edges("mixed", list(range(6)), edges)
        self.assertEqual(components(g), [[0, 1, 2], [3, 4], [5]])
        self.assertEqual(str(signature(g)), "1 × K_1 ⊔ 1 × K_2 ⊔ 1 × K_3")


class TestConnectivity(unittest.TestCase):

    def test_empty_graph(self):
        g = DotGraph.from_edges("empty", [], [])
        self.assertTrue(is_connected(g))
        self.assertTrue(is_totally_disconnected(g))
        self.assertEqual(signature(g), Signature())

    def test_edgeless_graph(self):
        g = DotGraph.from_edges("edgeless", [1, 2, 3], [])
        self.assertFalse(is_connected(g))
        self.assertTrue(is_totally_disconnected(g))
        self.assertEqual(str(signature(g)), "3 × K_1")

    def test_build_graph_from_predicate(self):
        g = build_graph(list(range(1, 7)), lambda x, y: (x * y) % 6 == 0, name="Z6")
        self.assertEqual(g.edge_count, 7)
        self.assertTrue(g.has_edge(2, 3))
        self.assertFalse(g.has_edge(1, 5))


@st.composite
def shuffled_graph(draw):
    """A random union of cliques and bicliques with its vertices shuffled."""
    parts = draw(st.lists(
        st.one_of(
            st.tuples(st.just("K"), st.integers(1, 6)),
            st.tuples(st.just("B"), st.integers(1, 4), st.integers(2, 4)),
        ),
        min_size=1,
        max_size=5,
    ))
    edges = []
    shapes = []
    offset = 0
    for part in parts:
        if part[0] == "K":
            t = part[1]
            edges += [(offset + i, offset + j) for i, j in combinations(range(t), 2)]
            shapes.append(ComponentShape.complete(t))
            offset += t
        else:
            s, t = part[1], part[2]
            edges += [(offset + i, offset + s + j) for i in range(s) for j in range(t)]
            shapes.append(ComponentShape.complete_bipartite(s, t))
            offset += s + t
    order = draw(st.permutations(list(range(offset))))
    return order, edges, Signature.from_shapes(shapes)


@pytest.mark.unit
@settings(max_examples=100, deadline=None)
@given(shuffled_graph())
def test_signature_is_invariant_under_relabelling(sample):
    """The signature does not depend on vertex order."""
    order, edges, expected = sample
    relabelled = [(order[i], order[j]) for i, j in edges]
    g = DotGraph.from_edges("shuffled", list(range(len(order))), relabelled)
    assert signature(g) == expected


if __name__ == '__main__':
    unittest.main()
