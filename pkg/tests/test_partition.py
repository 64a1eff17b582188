import os
import sys
import unittest
from fractions import Fraction

import networkx as nx
from hypothesis import given, settings, strategies as st

# Add src to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

from dmr_graphs.catalog import catalog
from dmr_graphs.errors import DimensionMismatchError, EccentricityError, GraphValidationError
from dmr_graphs.graph import Graph, compute_distances
from dmr_graphs.linalg import RationalMatrix
from dmr_graphs.partition import (
    Partition,
    characteristic_matrices,
    distance_partition,
    interlace,
    proper_mean_matrices,
    proper_mean_matrix,
    quotient_matrix,
)

F = Fraction
PRISM_BBAR = RationalMatrix([[0, 3, 0, 0], [1, 0, 2, 0], [0, F(3, 2), F(1, 2), 1], [0, 0, 2, 1]])
PRISM_B2 = RationalMatrix([[0, 0, 4, 0], [0, 2, F(2, 3), F(4, 3)], [1, F(1, 2), F(3, 2), 1], [0, 2, 2, 0]])
PRISM_B3 = RationalMatrix([[0, 0, 0, 2], [0, 0, F(4, 3), F(2, 3)], [0, 1, 1, 0], [1, 1, 0, 0]])


class TestPartition(unittest.TestCase):

    def test_invalid_partitions(self):
        for classes in (((0, 1), ()), ((0, 1), (1, 2)), ((0, 1),), ((0, 1), (2, 5))):
            with self.subTest(classes=classes):
                with self.assertRaises(GraphValidationError):
                    Partition(classes).validate(3)

    def test_characteristic_matrices(self):
        T, S, D = characteristic_matrices(Partition(((0, 2), (1,))), 3)
        self.assertEqual(T.tolist(), [[1, 0], [0, 1], [1, 0]])
        self.assertEqual(S[0, 0], F(1, 2))
        self.assertEqual(D, RationalMatrix.diag((2, 1)))
        self.assertEqual(T.T @ T, D)

    def test_distance_partition(self):
        dd = compute_distances(catalog("path(3)"))
        self.assertEqual(distance_partition(dd, 1).classes, ((1,), (0, 2)))
        with self.assertRaises(GraphValidationError):
            distance_partition(dd, 3)


class TestInterlacing(unittest.TestCase):

    def test_tight_split(self):
        holds, tight, split = interlace([3, 1, 1, 1, 1, 1, -2, -2, -2, -2], [3, 1, -2])
        self.assertTrue(holds)
        self.assertTrue(tight)
        self.assertEqual(split, 2)

    def test_not_interlacing(self):
        holds, tight, split = interlace([2, 0, -2], [3, 0])
        self.assertFalse(holds)
        self.assertFalse(tight)
        self.assertIsNone(split)

    def test_quotient_larger_than_host(self):
        with self.assertRaises(DimensionMismatchError):
            interlace([1.0], [1.0, 0.0])


class TestQuotient(unittest.TestCase):

    def test_petersen_distance_partition_is_equitable_and_tight(self):
        dd = compute_distances(catalog("petersen"))
        result = quotient_matrix(dd.adjacency, distance_partition(dd, 0))
        self.assertEqual(result.B.tolist(), [[0, 3, 0], [1, 0, 2], [0, 1, 2]])
        self.assertTrue(result.equitable)
        self.assertTrue(result.interlacing.tight)

    def test_prism_distance_partition(self):
        dd = compute_distances(catalog("prism_c5k2"))
        for u in range(dd.n):
            result = quotient_matrix(dd.adjacency, distance_partition(dd, u))
            self.assertEqual(result.B, PRISM_BBAR)
            self.assertFalse(result.equitable)
            self.assertTrue(result.interlacing.holds)
            self.assertFalse(result.interlacing.tight)

    def test_equitable_non_distance_partition(self):
        g = Graph.from_networkx(nx.circular_ladder_graph(5))
        result = quotient_matrix(compute_distances(g).adjacency, Partition((tuple(range(5)), tuple(range(5, 10)))))
        self.assertEqual(result.B.tolist(), [[2, 1], [1, 2]])
        self.assertTrue(result.equitable)

    def test_size_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            quotient_matrix(RationalMatrix.identity(3), Partition(((0, 1),)))

    @given(st.integers(min_value=0, max_value=2 ** 20), st.integers(min_value=2, max_value=5))
    @settings(max_examples=30, deadline=None)
    def test_random_partitions_interlace(self, seed, m):
        g = nx.gnp_random_graph(9, 0.5, seed=seed)
        classes = tuple(tuple(range(i, 9, m)) for i in range(m))
        adjacency = RationalMatrix.from_integers(nx.to_numpy_array(g, nodelist=range(9), dtype=int))
        result = quotient_matrix(adjacency, Partition(classes))
        self.assertTrue(result.interlacing.holds)


class TestProperMeanMatrices(unittest.TestCase):

    def test_prism_values(self):
        dd = compute_distances(catalog("prism_c5k2"))
        for u in (0, 4, 9):
            matrices = proper_mean_matrices(dd, u)
            self.assertEqual(matrices[0], RationalMatrix.identity(4))
            self.assertEqual(matrices[1], PRISM_BBAR)
            self.assertEqual(matrices[2], PRISM_B2)
            self.assertEqual(matrices[3], PRISM_B3)

    def test_single_pass_matches_quotients(self):
        for name in ("truncated_tetrahedron", "cay_z8", "sr_c3c4_complement"):
            dd = compute_distances(catalog(name))
            for u in range(dd.n):
                fast = proper_mean_matrices(dd, u)
                for i in range(dd.D + 1):
                    self.assertEqual(fast[i], proper_mean_matrix(dd, u, i))

    def test_eccentricity_error(self):
        dd = compute_distances(catalog("path(3)"))
        with self.assertRaises(EccentricityError):
            proper_mean_matrices(dd, 1)
        with self.assertRaises(EccentricityError):
            proper_mean_matrix(dd, 1, 1)

    def test_index_out_of_range(self):
        dd = compute_distances(catalog("cycle(5)"))
        with self.assertRaises(GraphValidationError):
            proper_mean_matrix(dd, 0, 3)


if __name__ == '__main__':
    unittest.main()
