import json
import os
import sys
import unittest

# Add src to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

from dmr_graphs import __version__
from dmr_graphs.catalog import catalog
from dmr_graphs.config_model import Config
from dmr_graphs.errors import GraphFormatError
from dmr_graphs.linalg import RationalMatrix
from dmr_graphs.report import build_report, matrix_from_json, parse_report, render_text, serialize_report


class TestBuildReport(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.prism = build_report(catalog("prism_c5k2"), source="catalog", value="prism_c5k2")

    def test_prism_profile(self):
        r = self.prism
        self.assertTrue(r.distance_mean_regular)
        self.assertTrue(r.input.graph6.startswith("I"))
        self.assertEqual(r.profile.k, [1, 3, 4, 2])
        self.assertEqual(r.profile.Bbar, [["0", "3", "0", "0"], ["1", "0", "2", "0"], ["0", "3/2", "1/2", "1"],
                                          ["0", "0", "2", "1"]])
        self.assertEqual(r.profile.monotonicity_flags, [])
        self.assertEqual(r.girth.girth, 4)
        self.assertTrue(r.girth.even_girth_exact)
        self.assertEqual(r.polynomials.values_at_degree, ["1", "3", "4", "2"])
        self.assertEqual(r.polynomials.polynomials[2].coefficients, ["-2", "0", "2/3"])
        self.assertTrue(r.algebra.polynomial_form_holds)
        self.assertFalse(r.algebra.subalgebra_closed)
        self.assertFalse(r.interlacing.tight)
        self.assertEqual(set(r.timing), {"distances", "spectrum", "classification", "girth", "polynomials",
                                         "algebra"})

    def test_mean_matrix_round_trips_exactly(self):
        bbar = matrix_from_json(self.prism.profile.Bbar)
        self.assertIsInstance(bbar, RationalMatrix)
        self.assertEqual(bbar.row_sums(), (3, 3, 3, 3))

    def test_eccentricity_witness(self):
        r = build_report(catalog("path(3)"))
        self.assertFalse(r.distance_mean_regular)
        self.assertIsNone(r.profile)
        self.assertIsNone(r.algebra)
        verdict = r.classification.distance_mean_regular
        self.assertEqual(verdict.reason, "eccentricity")
        self.assertEqual(verdict.witness.vertices, [0, 1])
        self.assertEqual(verdict.witness.expected, "(1, 1, 1)")
        self.assertEqual(verdict.witness.actual, "(1, 2, 0)")

    def test_spectral_obstruction_reason(self):
        r = build_report(catalog("cay_z21"))
        self.assertTrue(r.distance_mean_regular)
        self.assertEqual(r.classification.distance_regular.reason, "D=2 but 11 distinct eigenvalues")
        self.assertEqual(len(r.adjacency_spectrum.eigenvalues), 11)

    def test_truncated_tetrahedron_flags(self):
        r = build_report(catalog("truncated_tetrahedron"))
        flags = r.profile.monotonicity_flags
        self.assertEqual([(f.parameter, f.index, f.value, f.next_value) for f in flags], [("b", 1, "4/3", "3/2")])
        self.assertEqual(r.algebra.residuals["2"][2], ["0", "0", "1/2", "-1/2"])
        self.assertFalse(r.algebra.star_associative)
        self.assertIn("Bi_commute", r.algebra.witnesses)

    def test_float_digits(self):
        config = Config.model_validate({"report": {"float_digits": 3}})
        r = build_report(catalog("prism_c5k2"), config)
        self.assertEqual(r.polynomials.mean_spectrum.eigenvalues[:2], [3.0, 1.4])


class TestSerialization(unittest.TestCase):

    def test_round_trip(self):
        report = build_report(catalog("petersen"))
        text = serialize_report(report)
        self.assertEqual(parse_report(text), report)
        self.assertEqual(serialize_report(parse_report(text)), text)

    def test_deterministic_layout(self):
        data = json.loads(serialize_report(build_report(catalog("cycle(9)"))))
        self.assertEqual(data["schema"], "dmr-report/1")
        self.assertEqual(data["tool_version"], __version__)
        self.assertIsNone(data["girth"]["even_girth"])
        self.assertEqual(list(data), sorted(data))

    def test_rejects_bad_documents(self):
        for text in ("not json", "{}", "[1, 2]"):
            with self.subTest(text=text):
                with self.assertRaises(GraphFormatError):
                    parse_report(text)


class TestRenderText(unittest.TestCase):

    def test_sections(self):
        text = render_text(build_report(catalog("prism_c5k2"), source="catalog", value="prism_c5k2"))
        for fragment in ("# prism_c5k2 (catalog: prism_c5k2)", "## Classification", "## Mean-matrix", "3/2",
                         "## Mean-polynomials", "2/3*x^2 - 2", "## Algebra", "girth = 4"):
            self.assertIn(fragment, text)

    def test_non_mean_regular_graph(self):
        text = render_text(build_report(catalog("sr_c3c4_complement")))
        self.assertIn("## Classification", text)
        self.assertNotIn("## Mean-matrix", text)


if __name__ == '__main__':
    unittest.main()
