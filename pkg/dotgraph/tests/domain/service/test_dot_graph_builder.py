import unittest

import pytest

from dotgraph.domain.model.equivalence import EquivClass
from dotgraph.domain.model.errors import InvalidParameterError, MembershipMissingError, VertexCapExceededError
from dotgraph.domain.model.graph import ComponentShape, DotGraph, Signature
from dotgraph.domain.service.dot_graph_builder import DotGraphBuilder
from dotgraph.domain.service.graph_analysis import is_connected, signature
from dotgraph.domain.service.ring_factory import make_field, make_modular_ring


def K(t):
    return ComponentShape.complete(t)


def KB(s, t):
    return ComponentShape.complete_bipartite(s, t)


class TestDotProduct(unittest.TestCase):
    """Test cases for dot products and normalisation."""

    def test_dot_product(self):
        z5 = make_modular_ring(5)
        self.assertEqual(DotGraphBuilder.dot_product(z5, (1, 2), (2, 4)), 0)
        self.assertEqual(DotGraphBuilder.dot_product(z5, (1, 1), (1, 1)), 2)

    def test_dot_product_rejects_bad_vectors(self):
        z5 = make_modular_ring(5)
        with self.assertRaises(InvalidParameterError):
            DotGraphBuilder.dot_product(z5, (1, 2), (1, 2, 3))
        with self.assertRaises(InvalidParameterError):
            DotGraphBuilder.dot_product(z5, (), ())
        with self.assertRaises(InvalidParameterError):
            DotGraphBuilder.dot_product(z5, (1, 7), (1, 1))

    def test_normalize(self):
        z10 = make_modular_ring(10)
        self.assertEqual(DotGraphBuilder.normalize(z10, (3, 9)), (1, 3))
        self.assertEqual(DotGraphBuilder.normalize(z10, (2, 7)), (6, 1))
        self.assertEqual(DotGraphBuilder.normalize(z10, (2, 4)), (2, 4))

    def test_invalid_builder_settings(self):
        with self.assertRaises(InvalidParameterError):
            DotGraphBuilder(vertex_cap=0)
        with self.assertRaises(InvalidParameterError):
            DotGraphBuilder(block_size=0)


class TestVertexGraphs(unittest.TestCase):
    """Test cases for TD, ZD, UD and Gamma constructions."""

    def setUp(self):
        self.builder = DotGraphBuilder(vertex_cap=20000, block_size=7)

    def test_ud_gf4(self):
        """UD(GF(4)^2) is one triangle plus one K_{3,3}."""
        g = self.builder.build_ud(make_field(2, 2))
        self.assertEqual(g.vertex_count, 9)
        self.assertEqual(signature(g), Signature.of((K(3), 1), (KB(3, 3), 1)))

    def test_ud_z5(self):
        g = self.builder.build_ud(make_modular_ring(5))
        self.assertEqual(g.name, "UD(Z_5^2)")
        self.assertEqual((g.vertex_count, g.edge_count), (16, 28))
        self.assertEqual(str(signature(g)), "2 × K_4 ⊔ 1 × K_{4,4}")
        self.assertTrue(g.has_edge((1, 2), (2, 4)))

    def test_ud_z8_and_z10(self):
        self.assertEqual(signature(self.builder.build_ud(make_modular_ring(8))), Signature.of((KB(4, 4), 2)))
        self.assertEqual(
            signature(self.builder.build_ud(make_modular_ring(10))),
            Signature.of((K(4), 2), (KB(4, 4), 1)),
        )

    def test_zd_z3(self):
        g = self.builder.build_zd(make_modular_ring(3))
        self.assertEqual(g.vertices, ((0, 1), (0, 2), (1, 0), (2, 0)))
        self.assertEqual(signature(g), Signature.of((KB(2, 2), 1)))

    def test_td_partitions_into_zd_and_ud(self):
        ring = make_modular_ring(6)
        td = self.builder.build_td(ring)
        zd = self.builder.build_zd(ring)
        ud = self.builder.build_ud(ring)
        self.assertEqual(td.vertex_count, 35)
        self.assertEqual(set(td.vertices), set(zd.vertices) | set(ud.vertices))
        self.assertFalse(set(zd.vertices) & set(ud.vertices))
        self.assertTrue(is_connected(td))

    def test_td_over_a_field_has_no_cross_edges(self):
        ring = make_field(5)
        td = self.builder.build_td(ring)
        zd = self.builder.build_zd(ring)
        ud = self.builder.build_ud(ring)
        self.assertEqual(td.edge_set(), zd.edge_set() | ud.edge_set())
        self.assertFalse(is_connected(td))

    def test_odd_arity(self):
        g = self.builder.build_ud(make_modular_ring(4), k=3)
        self.assertEqual(g.vertex_count, 8)
        self.assertEqual(g.edge_count, 0)

    def test_gamma_matches_zd_over_a_field(self):
        ring = make_field(3, 2)
        self.assertTrue(self.builder.build_zd(ring).same_structure(self.builder.build_gamma(ring)))

    def test_gamma_differs_from_zd_over_z4(self):
        ring = make_modular_ring(4)
        gamma = self.builder.build_gamma(ring)
        self.assertFalse(self.builder.build_zd(ring).same_structure(gamma))
        self.assertTrue(gamma.has_edge((2, 0), (2, 2)))

    def test_invalid_arity(self):
        with self.assertRaises(InvalidParameterError):
            self.builder.build_td(make_modular_ring(5), k=0)


class TestMixedGraphs(unittest.TestCase):

    def setUp(self):
        self.builder = DotGraphBuilder(block_size=16)

    def test_prime_modulus(self):
        self.assertEqual(signature(self.builder.build_zd_mixed(5)), Signature.of((KB(4, 4), 1)))

    def test_small_moduli(self):
        self.assertEqual(str(signature(self.builder.build_zd_mixed(2))), "1 × K_2")
        self.assertEqual(signature(self.builder.build_zd_mixed(4)), Signature.of((KB(2, 2), 2)))
        self.assertEqual(signature(self.builder.build_zd_mixed(12)), Signature.of((KB(4, 4), 8)))

    def test_requires_modular_ring(self):
        with self.assertRaises(InvalidParameterError):
            self.builder.build_zd_mixed(make_field(2, 2))

    def test_induced(self):
        ring = make_modular_ring(4)
        g = self.builder.build_induced(ring, [(1, 1), (1, 3), (2, 2)], "induced")
        self.assertEqual(g.edge_count, 3)


class TestQuotients(unittest.TestCase):
    """Test cases for scalar-class quotients and their expansion."""

    def setUp(self):
        self.builder = DotGraphBuilder()

    def test_eud_z20(self):
        ring = make_modular_ring(20)
        eg = self.builder.build_eud(ring)
        self.assertEqual(eg.vertex_count, 8)
        self.assertEqual(signature(eg), Signature.of((K(2), 4)))
        self.assertTrue(all(isinstance(v, EquivClass) and v.size == 8 for v in eg.vertices))

        expanded = self.builder.expand_equivalence(eg, ring)
        self.assertEqual(expanded.name, "expanded EUD(Z_20^2)")
        self.assertEqual(signature(expanded), Signature.of((KB(8, 8), 4)))
        self.assertTrue(expanded.same_structure(self.builder.build_ud(ring)))

    def test_eud_z34(self):
        ring = make_modular_ring(34)
        eg = self.builder.build_eud(ring)
        self.assertEqual(signature(eg), Signature.of((K(1), 2), (K(2), 7)))
        self.assertEqual(sum(v.self_orthogonal for v in eg.vertices), 2)
        self.assertEqual(
            signature(self.builder.expand_equivalence(eg, ring)),
            Signature.of((K(16), 2), (KB(16, 16), 7)),
        )

    def test_eud_labels(self):
        eg = self.builder.build_eud(make_modular_ring(5))
        self.assertEqual(eg.labels, ("[(1, 1)]", "[(1, 2)]", "[(1, 3)]", "[(1, 4)]"))
        self.assertTrue(eg.has_edge(eg.vertices[0], eg.vertices[3]))

    def test_ezd_mixed(self):
        ring = make_modular_ring(7)
        eg = self.builder.build_ezd_mixed(ring)
        self.assertEqual(str(signature(eg)), "1 × K_2")
        expanded = self.builder.expand_equivalence(eg, ring)
        self.assertTrue(expanded.same_structure(self.builder.build_zd_mixed(ring)))

    def test_ezd_mixed_composite(self):
        ring = make_modular_ring(12)
        eg = self.builder.build_ezd_mixed(ring)
        self.assertEqual(signature(eg), Signature.of((K(2), 8)))
        self.assertTrue(self.builder.expand_equivalence(eg, ring).same_structure(self.builder.build_zd_mixed(ring)))

    def test_single_member_classes(self):
        """A one-vector class is self-orthogonal exactly when its vector is."""
        # Arrange
        z2 = make_modular_ring(2)

        # Act
        eg = self.builder.build_eud(z2)
        mixed = self.builder.build_ezd_mixed(z2)

        # Assert
        self.assertEqual(eg.vertex_count, 1)
        self.assertEqual(eg.vertices[0].members, ((1, 1),))
        self.assertTrue(eg.vertices[0].self_orthogonal)
        self.assertEqual([cls.representative for cls in mixed.vertices], [(0, 1), (1, 0)])
        self.assertFalse(any(cls.self_orthogonal for cls in mixed.vertices))
        self.assertEqual(self.builder.expand_equivalence(eg, z2).edge_count, 0)

    def test_expand_requires_membership(self):
        bare = DotGraph.from_edges("bare", ["a", "b"], [(0, 1)])
        with self.assertRaises(MembershipMissingError):
            self.builder.expand_equivalence(bare, make_modular_ring(5))


class TestVertexCap(unittest.TestCase):

    def test_cap_is_checked_before_enumeration(self):
        builder = DotGraphBuilder(vertex_cap=100)
        with self.assertRaises(VertexCapExceededError) as ctx:
            builder.build_td(make_modular_ring(11))
        self.assertEqual(ctx.exception.vertex_count, 120)
        self.assertEqual(ctx.exception.cap, 100)
        self.assertIn("TD(Z_11^2)", str(ctx.exception))

    def test_cap_on_large_modulus(self):
        builder = DotGraphBuilder()
        with self.assertRaises(VertexCapExceededError):
            builder.build_ud(make_modular_ring(10 ** 6))

    def test_cap_allows_exact_count(self):
        builder = DotGraphBuilder(vertex_cap=16)
        self.assertEqual(builder.build_ud(make_modular_ring(5)).vertex_count, 16)


@pytest.mark.slow
@pytest.mark.parametrize("n", [13, 25, 26, 65])
def test_larger_unit_graphs_build(n):
    ring = make_modular_ring(n)
    builder = DotGraphBuilder()
    g = builder.build_ud(ring)
    assert g.vertex_count == len(ring.units()) ** 2
    assert signature(g).vertex_count == g.vertex_count


if __name__ == '__main__':
    unittest.main()
