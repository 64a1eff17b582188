import os
import random
import sys
import unittest

import networkx as nx

# Add src to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

from dmr_graphs.errors import GraphFormatError
from dmr_graphs.formats import encode_graph6, format_edge_list, parse_edge_list, parse_graph6
from dmr_graphs.graph import Graph

DATA_DIR = os.path.join(os.path.dirname(__file__), '..', 'data')


class TestEdgeList(unittest.TestCase):

    def test_header_comments_and_duplicates(self):
        g = parse_edge_list("# triangle\nn=4\n0 1\n1 2 # middle\n2 0\n1 0\n\n2 3\n")
        self.assertEqual(g.n, 4)
        self.assertEqual(g.edge_count, 4)

    def test_n_inferred_from_largest_index(self):
        self.assertEqual(parse_edge_list("0 1\n1 4\n").n, 5)

    def test_malformed_lines(self):
        cases = {
            "0 1 2\n": "exactly two tokens",
            "0 a\n": "non-negative integer",
            "0 1\n1 ²\n": "non-negative integer",
            "0 ３\n": "non-negative integer",
            "1 1\n": "loop",
            "n=2\n0 2\n": "exceeds declared n",
            "0 1\nn=2\n": "header must precede",
            "# nothing\n": "no vertices",
        }
        for text, message in cases.items():
            with self.subTest(text=text):
                with self.assertRaises(GraphFormatError) as ctx:
                    parse_edge_list(text)
                self.assertIn(message, str(ctx.exception))

    def test_line_number_in_context(self):
        with self.assertRaises(GraphFormatError) as ctx:
            parse_edge_list("0 1\n\n2 2\n")
        self.assertEqual(ctx.exception.line_number, 3)

    def test_relabel(self):
        g = parse_edge_list("10 2\n2 3\n", relabel=True)
        self.assertEqual(g.labels, ("2", "3", "10"))
        self.assertEqual(g.edges, frozenset({(0, 2), (0, 1)}))
        named = parse_edge_list("b a\na c\n", relabel=True)
        self.assertEqual(named.labels, ("b", "a", "c"))

    def test_format_round_trip(self):
        g = Graph.from_networkx(nx.petersen_graph())
        self.assertEqual(parse_edge_list(format_edge_list(g)), g)

    def test_data_fixtures(self):
        with open(os.path.join(DATA_DIR, 'prism_c5k2.edges'), encoding='utf-8') as f:
            prism = parse_edge_list(f.read())
        self.assertEqual((prism.n, prism.edge_count), (10, 15))
        with open(os.path.join(DATA_DIR, 'p3.edges'), encoding='utf-8') as f:
            self.assertEqual(parse_edge_list(f.read()).edge_count, 2)


class TestGraph6(unittest.TestCase):

    def test_known_strings(self):
        self.assertEqual(encode_graph6(Graph.from_networkx(nx.petersen_graph())), "IheA@GUAo")
        self.assertEqual(parse_graph6(">>graph6<<A_\n"), Graph.from_edges(2, [(0, 1)]))
        self.assertEqual(encode_graph6(Graph.from_edges(1, [])), "@")

    def test_matches_networkx_on_random_graphs(self):
        rng = random.Random(2024)
        for _ in range(1000):
            n = rng.randint(1, 12)
            g = nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(1 << 30))
            ours = Graph.from_networkx(g)
            text = encode_graph6(ours)
            self.assertEqual(text.encode("ascii"), nx.to_graph6_bytes(g, header=False).strip())
            self.assertEqual(parse_graph6(text), ours)
            self.assertEqual(Graph.from_networkx(nx.from_graph6_bytes(text.encode("ascii"))), ours)

    def test_large_size_field(self):
        g = Graph.from_edges(70, [(0, 69), (3, 4)])
        text = encode_graph6(g)
        self.assertEqual(text[0], "~")
        self.assertEqual(parse_graph6(text), g)

    def test_rejects_bad_input(self):
        for text in ("", "A", "A_A", "B~~", "A" + chr(200), "Ab", "?"):
            with self.subTest(text=text):
                with self.assertRaises(GraphFormatError):
                    parse_graph6(text)


if __name__ == '__main__':
    unittest.main()
