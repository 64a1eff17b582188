import json
import logging
import os
import sys
import unittest

# Add src to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

from dmr_graphs.errors import (
    CatalogError,
    ConsistencyError,
    DimensionMismatchError,
    DmrGraphsError,
    EccentricityError,
    FileOperationError,
    GraphFormatError,
    GraphValidationError,
    UnknownError,
    wrap_exception,
)
from dmr_graphs.utils.logging import JSONFormatter, get_log_level, log_function_call


class TestErrorHierarchy(unittest.TestCase):

    def test_context_in_message(self):
        e = GraphFormatError("bad token", fmt="edges", line_number=4, token="x")
        self.assertIn("line=4", str(e))
        self.assertIn("token='x'", str(e))
        self.assertIsInstance(e, DmrGraphsError)

    def test_eccentricity_is_a_validation_error(self):
        e = EccentricityError(vertex=1, eccentricity=1, diameter=2)
        self.assertIsInstance(e, GraphValidationError)
        self.assertEqual(e.context["vertex"], 1)
        self.assertEqual((e.eccentricity, e.diameter), (1, 2))

    def test_detailed_message_names_the_cause(self):
        e = FileOperationError("Cannot read input file", file_path="x.edges", operation="read",
                               original_error=FileNotFoundError("x.edges"))
        self.assertIn("Caused by: FileNotFoundError", e.get_detailed_message())
        self.assertNotIn("Caused by", str(e))

    def test_structured_fields(self):
        e = DimensionMismatchError("no", operation="matmul", left_shape=[2, 3], right_shape=[2, 3])
        self.assertEqual(e.context["left_shape"], (2, 3))
        c = ConsistencyError("disagree", check="girth", details="4 != 6")
        self.assertEqual((c.check, c.details), ("girth", "4 != 6"))
        self.assertEqual(CatalogError("unknown", name="foo").context, {"name": "foo"})

    def test_wrap_exception(self):
        original = ValueError("boom")
        wrapped = wrap_exception(original, GraphFormatError, "Failed to load graph", fmt="graph6")
        self.assertIsInstance(wrapped, GraphFormatError)
        self.assertIs(wrapped.original_error, original)
        self.assertEqual(wrapped.context["format"], "graph6")
        unknown = wrap_exception(RuntimeError("odd"))
        self.assertIsInstance(unknown, UnknownError)
        self.assertEqual(unknown.message, "odd")
        self.assertIn("location", unknown.context)


class TestLogging(unittest.TestCase):

    def test_levels(self):
        self.assertEqual(get_log_level("debug"), logging.DEBUG)
        self.assertEqual(get_log_level("nonsense"), logging.INFO)

    def test_json_formatter_carries_extra_fields(self):
        record = logging.LogRecord("dmr_graphs.analysis", logging.INFO, __file__, 10, "vertex %d", (3,), None)
        record.vertex = 3
        entry = json.loads(JSONFormatter().format(record))
        self.assertEqual(entry["message"], "vertex 3")
        self.assertEqual(entry["logger"], "dmr_graphs.analysis")
        self.assertEqual(entry["vertex"], 3)

    def test_log_function_call_reraises(self):
        logger = logging.getLogger("dmr_graphs.tests")

        @log_function_call(logger)
        def fails():
            raise ConsistencyError("disagree")

        with self.assertLogs(logger, level="ERROR") as captured:
            with self.assertRaises(ConsistencyError):
                fails()
        self.assertIn("fails failed with error", captured.output[0])


if __name__ == '__main__':
    unittest.main()
