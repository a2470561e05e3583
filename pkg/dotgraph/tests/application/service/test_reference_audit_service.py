import unittest

from dotgraph.application.service.graph_service import GraphService
from dotgraph.application.service.reference_audit_service import ReferenceAuditService
from dotgraph.domain.model.graph import ComponentShape, Signature
from dotgraph.domain.model.prediction import GraphKind
from dotgraph.domain.service.dot_graph_builder import DotGraphBuilder
from dotgraph.domain.service.reference_catalog import REFERENCE_ENTRIES, ReferenceEntry, find_entry


class TestReferenceAuditService(unittest.TestCase):
    """Test cases for the ReferenceAuditService."""

    def setUp(self):
        """Set up test fixtures."""
        self.service = ReferenceAuditService(GraphService(builder=DotGraphBuilder()))

    def test_catalogue(self):
        self.assertEqual(
            [entry.key for entry in REFERENCE_ENTRIES],
            ["gf4_ud", "z5_ud", "z8_ud", "z10_ud", "z20_eud", "z34_eud"],
        )
        self.assertEqual(find_entry("z20_eud").ring, "zn:20")
        self.assertIsNone(find_entry("missing"))

    def test_unit_graph_entries_hold(self):
        for key in ("gf4_ud", "z5_ud", "z8_ud", "z10_ud"):
            with self.subTest(key=key):
                # Act
                result = self.service.audit_entry(find_entry(key))

                # Assert
                self.assertTrue(result.consistent)
                self.assertTrue(result.matches_reported)
                self.assertFalse(result.reported_inconsistent)
                self.assertIsNone(result.observed_expansion)
                self.assertNotIn("expansion", result.to_dict())

    def test_z20_quotient_and_expansion_hold(self):
        # Act
        result = self.service.audit_entry(find_entry("z20_eud"))

        # Assert
        self.assertTrue(result.matches_reported)
        self.assertEqual(result.observed_expansion, Signature.of((ComponentShape.complete_bipartite(8, 8), 4)))
        self.assertTrue(result.expansion_matches_reported)
        self.assertTrue(result.consistent)
        self.assertEqual(result.to_dict()["expansion"]["matches_reported"], True)

    def test_z34_reported_expansion_is_flagged(self):
        """Test that the reported 2 x K_8 is flagged while the prediction holds."""
        # Act
        result = self.service.audit_entry(find_entry("z34_eud"))

        # Assert
        self.assertTrue(result.matches_prediction)
        self.assertTrue(result.matches_reported)
        self.assertEqual(
            result.observed_expansion,
            Signature.of((ComponentShape.complete(16), 2), (ComponentShape.complete_bipartite(16, 16), 7)),
        )
        self.assertFalse(result.expansion_matches_reported)
        self.assertTrue(result.consistent)
        self.assertTrue(result.reported_inconsistent)
        self.assertTrue(any("K_8" in note for note in result.notes))

    def test_wrong_reported_signature(self):
        # Arrange
        entry = ReferenceEntry(
            key="bad",
            ring="zn:8",
            graph_kind=GraphKind.UD,
            reported=Signature.of((ComponentShape.complete(4), 4)),
        )
        service = ReferenceAuditService(GraphService(builder=DotGraphBuilder()), entries=[entry])

        # Act
        results = service.audit_all()

        # Assert
        self.assertEqual(len(results), 1)
        self.assertFalse(results[0].matches_reported)
        self.assertTrue(results[0].matches_prediction)
        self.assertEqual(len(results[0].notes), 1)

    def test_audit_all(self):
        results = self.service.audit_all()
        self.assertEqual(len(results), len(REFERENCE_ENTRIES))
        self.assertTrue(all(result.consistent for result in results))
        self.assertEqual([r.key for r in results if r.reported_inconsistent], ["z34_eud"])


if __name__ == '__main__':
    unittest.main()
