import os
import random
import sys
import unittest
from fractions import Fraction

# Add src to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

from dmr_graphs.algebra import fourier_coefficient
from dmr_graphs.analysis import classify, mean_numbers_at, triple_counts
from dmr_graphs.catalog import SUITE_NAMES, catalog, catalog_entries, catalog_table
from dmr_graphs.errors import CatalogError
from dmr_graphs.graph import compute_distances
from dmr_graphs.search import random_connected_graph, random_regular_graph

DMR_NAMES = (
    "complete(4)", "complete(5)", "cycle(4)", "cycle(5)", "cycle(6)", "cycle(9)", "hypercube(3)",
    "cycle_prism(3)", "cycle_prism(4)", "cycle_prism(6)", "petersen", "prism_c5k2", "truncated_tetrahedron",
    "cay_z8", "cay_z21",
)


def _classified(name):
    dd = compute_distances(catalog(name))
    return dd, classify(dd)


class TestCatalog(unittest.TestCase):

    def test_every_suite_graph_builds_connected(self):
        for name in SUITE_NAMES:
            with self.subTest(name=name):
                self.assertGreaterEqual(compute_distances(catalog(name)).n, 3)

    def test_orders(self):
        expected = {"petersen": 10, "prism_c5k2": 10, "truncated_tetrahedron": 12, "cay_z8": 8, "cay_z21": 21,
                    "sr_c3c4_complement": 7, "hypercube(4)": 16, "cycle_prism(5)": 10}
        for name, n in expected.items():
            self.assertEqual(catalog(name).n, n)

    def test_prism_matches_generated_prism(self):
        self.assertEqual(catalog("prism_c5k2").edge_count, catalog("cycle_prism(5)").edge_count)
        self.assertEqual(catalog("prism_c5k2").labels, tuple(str(i) for i in range(1, 11)))

    def test_bad_names(self):
        for name in ("nosuch", "cycle", "cycle(x)", "cycle(2)", "petersen(3)", "cycle(3,4)", "(3)"):
            with self.subTest(name=name):
                with self.assertRaises(CatalogError):
                    catalog(name)

    def test_table(self):
        table = catalog_table()
        self.assertEqual(list(table.columns), ["name", "n", "usage", "note"])
        self.assertEqual(len(table), len(catalog_entries()))
        prism = table[table["name"] == "prism_c5k2"].iloc[0]
        self.assertEqual(prism["n"], "10")
        z8 = table[table["name"] == "cay_z8"].iloc[0]
        self.assertIn("{+-1, 4}", z8["note"])


class TestOracleEquivalence(unittest.TestCase):
    """Direct counting, S^T A_i T, Fourier coefficients and triple counts give the same mean numbers."""

    def test_routes_agree_on_catalog_dmr_graphs(self):
        for name in DMR_NAMES:
            with self.subTest(name=name):
                dd, result = _classified(name)
                self.assertTrue(result.distance_mean_regular.holds)
                profile = result.profile
                table = profile.mean_numbers()
                size = profile.D + 1
                for u in range(dd.n):
                    self.assertEqual(mean_numbers_at(dd, u).tolist(), table.tolist())
                    triples = triple_counts(dd, u)
                    for h in range(size):
                        for i in range(size):
                            for j in range(size):
                                self.assertEqual(Fraction(int(triples[h, i, j]), profile.k[h]), table[h, i, j])
                for h in range(size):
                    for i in range(size):
                        for j in range(size):
                            self.assertEqual(table[h, i, j], table[h, j, i])
                            ij = dd.distance_matrix(i) @ dd.distance_matrix(j)
                            self.assertEqual(fourier_coefficient(ij, dd, h), table[h, i, j])

    def test_mean_array_identities(self):
        for name in DMR_NAMES:
            with self.subTest(name=name):
                _, result = _classified(name)
                p = result.profile
                self.assertEqual(set(p.Bbar.row_sums()), {p.degree})
                for i in range(p.D):
                    self.assertEqual(p.k[i] * p.b(i), p.k[i + 1] * p.c(i + 1))
                self.assertEqual(sum(p.k), p.n)


class TestImplicationChain(unittest.TestCase):
    """distance-regular => distance mean-regular => super-regular, and all characterizations agree."""

    def _check(self, dd):
        c = classify(dd)
        if c.distance_regular.holds:
            self.assertTrue(c.distance_mean_regular.holds)
        if c.distance_mean_regular.holds:
            self.assertTrue(c.super_regular.holds)
        if c.tight_interlacing:
            self.assertTrue(c.distance_regular.holds)
        verdicts = {k: v for k, v in c.characterizations.items() if k not in ("omega", "omega_diagonal")}
        self.assertEqual(set(verdicts.values()), {c.distance_mean_regular.holds})
        for name in ("omega", "omega_diagonal"):
            if name in c.characterizations:
                self.assertEqual(c.characterizations[name], c.mean_matrix_constant)
        return c

    def test_catalog(self):
        expected_dmr = set(DMR_NAMES)
        for name in SUITE_NAMES:
            with self.subTest(name=name):
                c = self._check(compute_distances(catalog(name)))
                self.assertEqual(c.distance_mean_regular.holds, name in expected_dmr)

    def test_random_connected_graphs(self):
        rng = random.Random(7)
        checked = 0
        while checked < 200:
            g = random_connected_graph(rng, rng.randint(3, 10), rng.uniform(0.2, 0.8))
            if g is None:
                continue
            self._check(compute_distances(g))
            checked += 1

    def test_random_regular_graphs(self):
        rng = random.Random(11)
        checked = 0
        while checked < 50:
            g = random_regular_graph(rng, rng.randint(5, 10))
            if g is None:
                continue
            self._check(compute_distances(g))
            checked += 1


if __name__ == '__main__':
    unittest.main()
