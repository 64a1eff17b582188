import contextlib
import io
import json
import os
import shutil
import sys
import tempfile
import unittest
from unittest.mock import patch

import yaml

# Add the repository root and src to the Python path
ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
sys.path.insert(0, ROOT)
sys.path.insert(0, os.path.join(ROOT, 'src'))

from dmr_graphs.errors import ConfigurationError, GraphValidationError
from dmr_graphs.report import parse_report
from scripts import dmr_tool, find_super_regular
from scripts.utils import apply_overrides, load_config, load_graph, parse_circulant, resolve_output

DATA_DIR = os.path.join(ROOT, 'data')


class CliTestCase(unittest.TestCase):
    """Runs main() against a quiet configuration in a scratch directory."""

    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.config = os.path.join(self.tmp, 'config.yaml')
        with open(self.config, 'w', encoding='utf-8') as f:
            yaml.safe_dump({"logging": {"level": "ERROR", "format": "console", "file": None}}, f)
        patcher = patch.dict(os.environ, {"DMR_CONFIG": self.config})
        patcher.start()
        self.addCleanup(patcher.stop)

    def tearDown(self):
        shutil.rmtree(self.tmp, ignore_errors=True)

    def run_main(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = dmr_tool.main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def write(self, name, text):
        path = os.path.join(self.tmp, name)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path


class TestExitCodes(CliTestCase):

    def test_golden_matrix(self):
        cases = [
            (("analyze", "--catalog", "prism_c5k2"), 0),
            (("analyze", "--edges", os.path.join(DATA_DIR, "p3.edges")), 2),
            (("analyze", "--edges", os.path.join(DATA_DIR, "prism_c5k2.edges")), 0),
            (("check", "--catalog", "petersen", "drg"), 0),
            (("check", "--catalog", "cay_z21", "drg"), 2),
            (("check", "--catalog", "cay_z21", "dmr"), 0),
            (("check", "--catalog", "prism_c5k2", "hadamard"), 0),
            (("check", "--catalog", "sr_c3c4_complement", "super-regular"), 0),
            (("check", "--catalog", "sr_c3c4_complement", "triples"), 2),
            (("check", "--circulant", "8:1,4", "omega"), 0),
            (("check", "--graph6", "IheA@GUAo", "dmr"), 0),
            (("analyze", "--graph6", "A"), 1),
            (("analyze", "--catalog", "nosuch"), 1),
            (("analyze", "--circulant", "8:x"), 1),
            (("analyze", "--edges", os.path.join(DATA_DIR, "missing.edges")), 1),
            (("analyze", "--catalog", "petersen", "--tol", "-1"), 1),
            ((), 0),
        ]
        for argv, expected in cases:
            with self.subTest(argv=argv):
                code, _, _ = self.run_main(*argv)
                self.assertEqual(code, expected)

    def test_disconnected_graph(self):
        path = self.write("two.edges", "0 1\n2 3\n")
        code, out, err = self.run_main("analyze", "--edges", path)
        self.assertEqual(code, 1)
        self.assertEqual(out, "")
        self.assertIn("Error", err)
        self.assertIn("Troubleshooting", err)

    def test_missing_input_is_a_usage_error(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit):
                dmr_tool.main(["analyze"])
            with self.assertRaises(SystemExit):
                dmr_tool.main(["analyze", "--catalog", "petersen", "--edges", "x"])

    def test_interrupt(self):
        with patch.object(dmr_tool, "build_report", side_effect=KeyboardInterrupt):
            code, _, err = self.run_main("analyze", "--catalog", "petersen")
        self.assertEqual(code, 130)
        self.assertIn("interrupted", err)

    def test_unexpected_error(self):
        with patch.object(dmr_tool, "build_report", side_effect=RuntimeError("boom")):
            code, _, err = self.run_main("analyze", "--catalog", "petersen")
        self.assertEqual(code, 1)
        self.assertIn("boom", err)


class TestOutput(CliTestCase):

    def test_json_report(self):
        code, out, _ = self.run_main("analyze", "--catalog", "truncated_tetrahedron", "--json")
        self.assertEqual(code, 0)
        report = parse_report(out)
        self.assertEqual(report.input.source, "catalog")
        self.assertEqual(report.profile.k, [1, 3, 4, 4])

    def test_output_file(self):
        target = os.path.join(self.tmp, "reports", "petersen.json")
        code, out, _ = self.run_main("analyze", "--catalog", "petersen", "--json", "--output", target)
        self.assertEqual(code, 0)
        self.assertEqual(out, "")
        with open(target, encoding='utf-8') as f:
            w = parse_report(f.read()).polynomials.w
        for got, want in zip(w, (1, 5, 4)):
            self.assertAlmostEqual(got, want, places=9)

    def test_bare_output_name_goes_to_output_dir(self):
        out_dir = os.path.join(self.tmp, "out")
        config = self.write("out.yaml", yaml.safe_dump({
            "logging": {"level": "ERROR", "format": "console", "file": None},
            "report": {"output_dir": out_dir},
        }))
        code, out, _ = self.run_main("analyze", "--catalog", "petersen", "--json", "--config", config,
                                     "--output", "petersen.json")
        self.assertEqual(code, 0)
        self.assertEqual(out, "")
        with open(os.path.join(out_dir, "petersen.json"), encoding='utf-8') as f:
            self.assertEqual(parse_report(f.read()).input.source, "catalog")

    def test_check_text_and_json(self):
        code, out, _ = self.run_main("check", "--edges", os.path.join(DATA_DIR, "p3.edges"), "dmr")
        self.assertEqual(code, 2)
        self.assertIn("dmr: fails", out)
        self.assertIn("reason: eccentricity", out)
        code, out, _ = self.run_main("check", "--catalog", "cay_z21", "drg", "--json")
        payload = json.loads(out)
        self.assertEqual(payload["property"], "drg")
        self.assertFalse(payload["verdict"]["holds"])
        self.assertEqual(payload["verdict"]["reason"], "D=2 but 11 distinct eigenvalues")

    def test_catalog_listing(self):
        code, out, _ = self.run_main("catalog", "--json")
        self.assertEqual(code, 0)
        names = [row["name"] for row in json.loads(out)]
        self.assertIn("truncated_tetrahedron", names)
        code, out, _ = self.run_main()
        self.assertIn("| name", out)

    def test_relabel(self):
        path = self.write("labels.edges", "a b\nb c\nc a\n")
        code, out, _ = self.run_main("check", "--edges", path, "--relabel", "drg")
        self.assertEqual(code, 0)


class TestScriptUtils(CliTestCase):

    def test_config_from_environment(self):
        self.assertEqual(load_config().logging.level, "ERROR")

    def test_missing_config_gives_defaults(self):
        config = load_config(os.path.join(self.tmp, "absent.yaml"))
        self.assertEqual(config.spectral.cluster_tol, 1e-6)

    def test_invalid_config(self):
        bad_value = self.write("bad.yaml", "spectral:\n  tol: -1\n")
        with self.assertRaises(ConfigurationError) as ctx:
            load_config(bad_value)
        self.assertEqual(ctx.exception.context.get("config_key"), "spectral.tol")
        with self.assertRaises(ConfigurationError):
            load_config(self.write("list.yaml", "- 1\n- 2\n"))
        with self.assertRaises(ConfigurationError):
            load_config(self.write("broken.yaml", "spectral: [\n"))

    def test_overrides(self):
        config = apply_overrides(load_config(), tol=1e-10)
        self.assertEqual(config.spectral.tol, 1e-10)
        with self.assertRaises(ConfigurationError):
            apply_overrides(config, cluster_tol=0)

    def test_circulant_option(self):
        self.assertEqual(parse_circulant("8:1,4").edge_count, 12)

    def test_resolve_output(self):
        self.assertEqual(resolve_output("x.json", "reports"), os.path.join("reports", "x.json"))
        self.assertEqual(resolve_output(os.path.join("out", "x.json"), "reports"), os.path.join("out", "x.json"))
        absolute = os.path.join(self.tmp, "x.json")
        self.assertEqual(resolve_output(absolute, "reports"), absolute)
        self.assertEqual(resolve_output("x.json", ""), "x.json")

    def test_graph6_file_or_string(self):
        path = self.write("petersen.g6", "IheA@GUAo\n")
        from_file, source, _ = load_graph(graph6=path)
        inline, _, _ = load_graph(graph6="IheA@GUAo")
        self.assertEqual(source, "graph6")
        self.assertEqual(from_file, inline)
        with self.assertRaises(GraphValidationError):
            load_graph()


class TestFindSuperRegular(CliTestCase):

    def test_writes_a_witness(self):
        target = os.path.join(self.tmp, "witness.g6")
        with contextlib.redirect_stdout(io.StringIO()):
            code = find_super_regular.main(["--budget", "400", "--seed", "3", "--output", target])
        if code == 2:
            self.skipTest("no witness within the budget for this seed")
        self.assertEqual(code, 0)
        code, _, _ = self.run_main("check", "--graph6", target, "dmr")
        self.assertEqual(code, 2)
        code, _, _ = self.run_main("check", "--graph6", target, "super-regular")
        self.assertEqual(code, 0)


if __name__ == '__main__':
    unittest.main()
