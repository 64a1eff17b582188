import os
import sys
import unittest

import networkx as nx
import numpy as np

# Add src to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

from dmr_graphs.errors import GraphValidationError
from dmr_graphs.graph import Graph, cartesian_product, circulant, compute_distances


class TestGraph(unittest.TestCase):

    def test_edges_are_normalized(self):
        g = Graph.from_edges(3, [(1, 0), (0, 1), (2, 1)])
        self.assertEqual(g.edges, frozenset({(0, 1), (1, 2)}))
        self.assertEqual(g.degrees, (1, 2, 1))
        self.assertEqual(g.neighbors(1), (0, 2))

    def test_invalid_graphs(self):
        with self.assertRaises(GraphValidationError):
            Graph.from_edges(0, [])
        with self.assertRaises(GraphValidationError):
            Graph.from_edges(2, [(0, 0)])
        with self.assertRaises(GraphValidationError):
            Graph.from_edges(2, [(0, 2)])

    def test_networkx_round_trip(self):
        g = Graph.from_networkx(nx.petersen_graph())
        self.assertEqual(Graph.from_networkx(g.to_networkx()), g)

    def test_name_does_not_affect_equality(self):
        self.assertEqual(Graph.from_edges(2, [(0, 1)], name="a"), Graph.from_edges(2, [(0, 1)], name="b"))


class TestGenerators(unittest.TestCase):

    def test_circulant_closes_under_negation(self):
        g = circulant(8, [1, 4])
        self.assertEqual(set(g.degrees), {3})
        self.assertEqual(g.edge_count, 12)

    def test_circulant_rejects_bad_sets(self):
        with self.assertRaises(GraphValidationError):
            circulant(8, [])
        with self.assertRaises(GraphValidationError):
            circulant(8, [8])
        with self.assertRaises(GraphValidationError):
            circulant(2, [1])

    def test_cartesian_product_is_prism(self):
        prism = cartesian_product(Graph.from_networkx(nx.cycle_graph(5)), Graph.from_networkx(nx.complete_graph(2)))
        self.assertEqual(prism.n, 10)
        self.assertEqual(prism.edge_count, 15)
        self.assertEqual(set(prism.degrees), {3})


class TestDistances(unittest.TestCase):

    def test_matches_floyd_warshall(self):
        rng = np.random.default_rng(11)
        checked = 0
        while checked < 25:
            g = nx.gnp_random_graph(9, 0.35, seed=int(rng.integers(1 << 30)))
            if not nx.is_connected(g):
                continue
            dd = compute_distances(Graph.from_networkx(g))
            oracle = nx.floyd_warshall_numpy(g, nodelist=sorted(g.nodes()))
            self.assertTrue(np.array_equal(dd.dist, oracle.astype(np.int64)))
            self.assertEqual(sum(dd.distance_matrices).tolist(), np.ones((9, 9), dtype=np.int64).tolist())
            checked += 1

    def test_shells_of_path(self):
        dd = compute_distances(Graph.from_networkx(nx.path_graph(3)))
        self.assertEqual(dd.D, 2)
        self.assertEqual(dd.eccentricities, (2, 1, 2))
        self.assertEqual(dd.shell_sizes(1), (1, 2, 0))
        self.assertEqual(dd.shell_sizes(0), (1, 1, 1))

    def test_disconnected(self):
        with self.assertRaises(GraphValidationError):
            compute_distances(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_single_vertex(self):
        with self.assertRaises(GraphValidationError) as ctx:
            compute_distances(Graph.from_edges(1, []))
        self.assertEqual(ctx.exception.context["field_name"], "n")


if __name__ == '__main__':
    unittest.main()
