import json
import unittest

from dotgraph.domain.model.errors import InvalidParameterError
from dotgraph.domain.model.graph import ComponentShape, Signature
from dotgraph.domain.model.prediction import GraphKind, Prediction, TheoremId, VerificationReport


class TestGraphKind(unittest.TestCase):

    def test_flags(self):
        self.assertTrue(GraphKind.EUD.is_quotient)
        self.assertTrue(GraphKind.EZD_MIXED.is_quotient)
        self.assertFalse(GraphKind.UD.is_quotient)
        self.assertTrue(GraphKind.ZD_MIXED.needs_modular_ring)
        self.assertFalse(GraphKind.TD.needs_modular_ring)
        self.assertEqual(GraphKind("zdr1r2"), GraphKind.ZD_MIXED)


class TestPrediction(unittest.TestCase):
    """Test cases for prediction records."""

    def setUp(self):
        self.signature = Signature.of(
            (ComponentShape.complete(4), 2),
            (ComponentShape.complete_bipartite(4, 4), 1),
        )

    def test_vertex_total_must_match(self):
        with self.assertRaises(InvalidParameterError):
            Prediction(
                theorem=TheoremId.MODULAR_UD,
                graph_kind=GraphKind.UD,
                ring_label="Z_10",
                expected=self.signature,
                vertex_count=15,
            )

    def test_to_dict(self):
        prediction = Prediction(
            theorem=TheoremId.MODULAR_UD,
            graph_kind=GraphKind.UD,
            ring_label="Z_10",
            expected=self.signature,
            vertex_count=16,
            params=(("n", 10),),
        )
        data = prediction.to_dict()
        self.assertFalse(prediction.is_property)
        self.assertEqual(data["theorem"], "modular_ud")
        self.assertEqual(data["params"], {"n": 10})
        self.assertEqual(data["expected"][0], {"shape": "K_t", "t": 4, "count": 2})

    def test_property_prediction_skips_vertex_check(self):
        prediction = Prediction(
            theorem=TheoremId.TD_CONNECTIVITY,
            graph_kind=GraphKind.TD,
            ring_label="Z_6",
            expected=True,
            vertex_count=36,
            property_name="connected",
        )
        self.assertTrue(prediction.is_property)
        self.assertIs(prediction.to_dict()["expected"], True)


class TestVerificationReport(unittest.TestCase):
    """Test cases for comparing predictions with observations."""

    def setUp(self):
        self.predicted = Signature.of(
            (ComponentShape.complete(4), 2),
            (ComponentShape.complete_bipartite(4, 4), 1),
        )

    def test_match(self):
        report = VerificationReport.compare(TheoremId.MODULAR_UD, {"n": 10}, self.predicted, self.predicted)
        self.assertTrue(report.match)
        self.assertIsNone(report.mismatch_detail)
        self.assertNotIn("mismatch_detail", report.to_dict())
        self.assertIn("match", report.summary())

    def test_signature_mismatch_detail(self):
        observed = Signature.of((ComponentShape.complete(4), 4))
        report = VerificationReport.compare(TheoremId.MODULAR_UD, {"n": 10}, self.predicted, observed)
        self.assertFalse(report.match)
        self.assertEqual(report.mismatch_detail, {
            "K_4": {"predicted": 2, "observed": 4},
            "K_{4,4}": {"predicted": 1, "observed": 0},
        })
        self.assertTrue(report.summary().startswith("modular_ud(n=10): MISMATCH"))

    def test_property_mismatch_detail(self):
        report = VerificationReport.compare(TheoremId.TD_CONNECTIVITY, {"n": 7}, False, True)
        self.assertEqual(report.mismatch_detail, {"predicted": False, "observed": True})

    def test_json_round_trip(self):
        observed = Signature.of((ComponentShape.complete(4), 4))
        report = VerificationReport.compare(
            TheoremId.MODULAR_UD, {"n": 10}, self.predicted, observed, notes=("checked",)
        )
        restored = VerificationReport.from_dict(json.loads(json.dumps(report.to_dict())))
        self.assertEqual(restored, report)


if __name__ == '__main__':
    unittest.main()
