import unittest
from argparse import Namespace

from dotgraph.application.dto.cli_config_dto import CliConfig, parse_range
from dotgraph.domain.model.errors import InvalidParameterError
from dotgraph.domain.model.prediction import GraphKind
from dotgraph.domain.model.ring import RingKind, RingRequest


def namespace(**kwargs):
    defaults = {"command": "build", "arity": 2, "vertex_cap": None, "output": None}
    defaults.update(kwargs)
    return Namespace(**defaults)


class TestParseRange(unittest.TestCase):

    def test_valid(self):
        self.assertEqual(parse_range("3..60"), (3, 60))
        self.assertEqual(parse_range("7..7"), (7, 7))

    def test_invalid(self):
        for text in ("3-60", "a..b", "10..3", ".."):
            with self.subTest(text=text):
                with self.assertRaises(InvalidParameterError):
                    parse_range(text)


class TestCliConfig(unittest.TestCase):
    """Test cases for command-line configuration."""

    def test_build(self):
        config = CliConfig.from_namespace(namespace(ring="zn:10", graph="ud"))
        self.assertEqual(config.ring, RingRequest(RingKind.MODULAR, 10))
        self.assertIs(config.graph, GraphKind.UD)
        self.assertEqual(config.to_dict()["ring"], "zn:10")

    def test_sweep(self):
        config = CliConfig.from_namespace(
            namespace(command="sweep", graph="ud", range="3..60", family="gf", workers=4)
        )
        self.assertEqual(config.sweep_range, (3, 60))
        self.assertIs(config.family, RingKind.FIELD)
        self.assertEqual(config.to_dict()["range"], [3, 60])

    def test_missing_parameters(self):
        with self.assertRaises(InvalidParameterError):
            CliConfig.from_namespace(namespace(graph="ud"))
        with self.assertRaises(InvalidParameterError):
            CliConfig.from_namespace(namespace(command="sweep", graph="ud"))

    def test_invalid_numbers(self):
        with self.assertRaises(InvalidParameterError):
            CliConfig.from_namespace(namespace(ring="zn:5", graph="ud", arity=0))
        with self.assertRaises(InvalidParameterError):
            CliConfig.from_namespace(namespace(ring="zn:5", graph="ud", vertex_cap=0))
        with self.assertRaises(InvalidParameterError):
            CliConfig(command="sweep", graph=GraphKind.UD, sweep_range=(3, 4), workers=0).validate()

    def test_quotient_arity(self):
        with self.assertRaises(InvalidParameterError):
            CliConfig.from_namespace(namespace(ring="zn:5", graph="eud", arity=3))

    def test_mixed_graphs_need_modular_ring(self):
        with self.assertRaises(InvalidParameterError):
            CliConfig.from_namespace(namespace(ring="gf:2:2", graph="zdr1r2"))
        with self.assertRaises(InvalidParameterError):
            CliConfig.from_namespace(namespace(command="sweep", graph="ezdr1r2", range="2..9", family="gf"))

    def test_unknown_values(self):
        with self.assertRaises(InvalidParameterError):
            CliConfig.from_namespace(namespace(ring="zn:5", graph="xx"))
        with self.assertRaises(InvalidParameterError):
            CliConfig(command="plot").validate()

    def test_audit_needs_nothing(self):
        config = CliConfig.from_namespace(Namespace(command="audit", vertex_cap=None))
        self.assertEqual(config.arity, 2)
        self.assertIsNone(config.graph)


if __name__ == '__main__':
    unittest.main()
