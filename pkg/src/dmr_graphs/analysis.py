#!/usr/bin/env python3
"""
Distance mean-regularity: verdicts, profiles and the counting characterizations.

Every well-definedness test is an exact comparison across vertices. Witnesses
report the first violation, scanning vertices in index order and then index
tuples lexicographically.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from dmr_graphs.errors import ConsistencyError, EccentricityError
from dmr_graphs.graph import DistanceData
from dmr_graphs.linalg import Rational, RationalMatrix, to_rational
from dmr_graphs.partition import distance_partition, proper_mean_matrices, quotient_matrix
from dmr_graphs.spectra import DEFAULT_CLUSTER_TOL, DEFAULT_TOL, SpectralData, real_eigenvalues
from dmr_graphs.utils.logging import get_logger, log_function_call

logger = get_logger(__name__)


@dataclass(frozen=True)
class Witness:
    vertices: Tuple[int, ...]
    indices: Tuple[int, ...] = ()
    expected: Any = None
    actual: Any = None
    description: str = ""


@dataclass(frozen=True)
class Verdict:
    holds: bool
    reason: str = ""
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.holds


class MonotonicityFlag(NamedTuple):
    parameter: str
    index: int
    value: Rational
    next_value: Rational


@dataclass(frozen=True)
class DmrProfile:
    """Parameters of a distance mean-regular graph."""

    D: int
    k: Tuple[int, ...]
    n: int
    Bbar: RationalMatrix
    proper_Bi: Tuple[RationalMatrix, ...]

    @property
    def degree(self) -> int:
        return self.k[1] if self.D >= 1 else 0

    @property
    def abar(self) -> Tuple[Rational, ...]:
        return tuple(self.Bbar[h, h] for h in range(self.D + 1))

    @property
    def bbar(self) -> Tuple[Rational, ...]:
        """b_0..b_(D-1)."""
        return tuple(self.Bbar[h, h + 1] for h in range(self.D))

    @property
    def cbar(self) -> Tuple[Rational, ...]:
        """c_1..c_D."""
        return tuple(self.Bbar[h, h - 1] for h in range(1, self.D + 1))

    def a(self, i: int) -> Rational:
        return self.Bbar[i, i]

    def b(self, i: int) -> Rational:
        """b_i with b_(-1) = b_D = 0."""
        return self.Bbar[i, i + 1] if 0 <= i < self.D else 0

    def c(self, i: int) -> Rational:
        """c_i with c_0 = c_(D+1) = 0."""
        return self.Bbar[i, i - 1] if 1 <= i <= self.D else 0

    @property
    def mean_array(self) -> Tuple[Tuple[Rational, ...], Tuple[Rational, ...]]:
        return self.bbar, self.cbar

    def mean_number(self, h: int, i: int, j: int) -> Rational:
        """p_ij^h, the (h, j) entry of the proper mean-matrix B_i."""
        return self.proper_Bi[i][h, j]

    def mean_numbers(self) -> np.ndarray:
        size = self.D + 1
        table = np.empty((size, size, size), dtype=object)
        for h in range(size):
            for i in range(size):
                for j in range(size):
                    table[h, i, j] = self.mean_number(h, i, j)
        return table

    def monotonicity_flags(self) -> List[MonotonicityFlag]:
        """Indices where b_i < b_(i+1) or c_i > c_(i+1); distance-regular graphs never have any."""
        flags = []
        for i in range(self.D - 1):
            if self.b(i) < self.b(i + 1):
                flags.append(MonotonicityFlag("b", i, self.b(i), self.b(i + 1)))
        for i in range(1, self.D):
            if self.c(i) > self.c(i + 1):
                flags.append(MonotonicityFlag("c", i, self.c(i), self.c(i + 1)))
        return flags

    def validate(self) -> None:
        """
        Check the structural identities of a mean-regular profile.

        Raises:
            ConsistencyError: naming the first identity that fails
        """
        size = self.D + 1
        if self.Bbar.shape != (size, size) or len(self.proper_Bi) != size or len(self.k) != size:
            raise ConsistencyError("profile dimensions disagree with the diameter", check="profile")
        for h in range(size):
            for j in range(size):
                if abs(h - j) > 1 and self.Bbar[h, j] != 0:
                    raise ConsistencyError("mean-matrix is not tridiagonal", check="profile", details=(h, j))
        if self.a(0) != 0:
            raise ConsistencyError("a_0 must vanish", check="profile", details=self.a(0))
        if any(s != self.degree for s in self.Bbar.row_sums()):
            raise ConsistencyError("mean-matrix rows must sum to the degree", check="profile",
                                   details=self.Bbar.row_sums())
        for i in range(self.D):
            if self.k[i] * self.b(i) != self.c(i + 1) * self.k[i + 1]:
                raise ConsistencyError("k_i b_i != c_(i+1) k_(i+1)", check="profile", details=i)
        if self.proper_Bi[0] != RationalMatrix.identity(size):
            raise ConsistencyError("B_0 must be the identity", check="profile")
        if self.D >= 1 and self.proper_Bi[1] != self.Bbar:
            raise ConsistencyError("B_1 must equal the mean-matrix", check="profile")
        for i in range(size):
            if any(s != self.k[i] for s in self.proper_Bi[i].row_sums()):
                raise ConsistencyError("rows of B_i must sum to k_i", check="profile", details=i)
        for h in range(size):
            for i in range(size):
                for j in range(i + 1, size):
                    if self.mean_number(h, i, j) != self.mean_number(h, j, i):
                        raise ConsistencyError("mean numbers are not symmetric", check="profile",
                                               details=(h, i, j))


@dataclass(frozen=True)
class DmrResult:
    verdict: Verdict
    profile: Optional[DmrProfile] = None
    tight_interlacing: Optional[bool] = None
    first_differing_index: Optional[int] = None
    mean_matrix_constant: bool = False


@dataclass(frozen=True)
class OmegaTable:
    """Edge counts between distance shells: omega_ii and omega_(i,i+1)."""

    diagonal: Tuple[int, ...]
    band: Tuple[int, ...]

    def omega(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        if i == j:
            return self.diagonal[i]
        if j == i + 1 and i < len(self.band):
            return self.band[i]
        return 0


@dataclass(frozen=True)
class Classification:
    distance_regular: Verdict
    distance_mean_regular: Verdict
    super_regular: Verdict
    characterizations: Dict[str, bool] = field(default_factory=dict)
    tight_interlacing: Optional[bool] = None
    mean_matrix_constant: bool = False
    profile: Optional[DmrProfile] = None
    first_differing_index: Optional[int] = None

    @property
    def flags(self) -> Dict[str, bool]:
        return {
            "distance_regular": self.distance_regular.holds,
            "distance_mean_regular": self.distance_mean_regular.holds,
            "super_regular": self.super_regular.holds,
        }

    @property
    def reasons(self) -> Dict[str, str]:
        return {
            "distance_regular": self.distance_regular.reason,
            "distance_mean_regular": self.distance_mean_regular.reason,
            "super_regular": self.super_regular.reason,
        }

    @property
    def witnesses(self) -> Dict[str, Witness]:
        pairs = (
            ("distance_regular", self.distance_regular),
            ("distance_mean_regular", self.distance_mean_regular),
            ("super_regular", self.super_regular),
        )
        return {name: v.witness for name, v in pairs if v.witness is not None}


def _first_difference(a: np.ndarray, b: np.ndarray) -> Optional[Tuple[int, ...]]:
    diff = np.argwhere(a != b)
    if diff.size == 0:
        return None
    return tuple(int(x) for x in diff[0])


def eccentricity_check(dd: DistanceData) -> Verdict:
    """Every vertex must reach the diameter; otherwise the distance partitions have different lengths."""
    ecc = dd.eccentricities
    short = [u for u in range(dd.n) if ecc[u] < dd.D]
    if not short:
        return Verdict(True, "every vertex has eccentricity D")
    full = ecc.index(dd.D)
    return Verdict(
        False,
        "eccentricity",
        Witness((full, short[0]), (), dd.shell_sizes(full), dd.shell_sizes(short[0]),
                f"vertex {short[0]} has eccentricity {ecc[short[0]]} < D={dd.D}"),
    )


def super_regular_check(dd: DistanceData) -> Verdict:
    """|Gamma_i(u)| independent of u for every i."""
    reference = dd.shell_sizes(0)
    for u in range(1, dd.n):
        sizes = dd.shell_sizes(u)
        if sizes != reference:
            i = next(i for i, (x, y) in enumerate(zip(reference, sizes)) if x != y)
            return Verdict(False, f"shell size k_{i} differs between vertices 0 and {u}",
                           Witness((0, u), (i,), reference[i], sizes[i], "shell sizes"))
    return Verdict(True, f"shell sizes {reference}")


def mean_numbers_at(dd: DistanceData, u: int) -> np.ndarray:
    """
    p_ij^h(u) = (1/|Gamma_h(u)|) * sum over v in Gamma_h(u) of |Gamma_i(u) & Gamma_j(v)|, by direct counting.

    Returns:
        Object array indexed [h, i, j]

    Raises:
        EccentricityError: if ecc(u) < D
    """
    if dd.ecc(u) < dd.D:
        raise EccentricityError(u, dd.ecc(u), dd.D)
    size = dd.D + 1
    sets = dd.shell_sets
    table = np.empty((size, size, size), dtype=object)
    for h in range(size):
        shell = dd.shells[u][h]
        for i in range(size):
            for j in range(size):
                total = sum(len(sets[u][i] & sets[v][j]) for v in shell)
                table[h, i, j] = to_rational(Fraction(total, len(shell)))
    return table


def _tight_interlacing(dd: DistanceData, tol: float, cluster_tol: float) -> bool:
    theta = real_eigenvalues(dd.adjacency, tol=tol, cluster_tol=cluster_tol)
    tight = True
    for u in range(dd.n):
        result = quotient_matrix(dd.adjacency, distance_partition(dd, u), theta=theta, tol=tol,
                                 cluster_tol=cluster_tol)
        tight = tight and result.interlacing.tight
    return tight


@log_function_call(logger)
def is_distance_mean_regular(
    dd: DistanceData,
    tol: float = DEFAULT_TOL,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    interlacing: bool = True,
) -> DmrResult:
    """
    Compare S^T A_i T over the distance partitions of all vertices, for every i.

    Args:
        dd: Distance data of a connected graph
        tol, cluster_tol: Spectral tolerances for the tight-interlacing test
        interlacing: Run the tight-interlacing test on a positive verdict

    Returns:
        DmrResult with the profile when the graph is distance mean-regular
    """
    ecc = eccentricity_check(dd)
    if not ecc.holds:
        return DmrResult(ecc)

    sizes = super_regular_check(dd)
    reference = proper_mean_matrices(dd, 0)
    reference_arrays = [np.array(m.tolist(), dtype=object) for m in reference]

    first: Optional[Witness] = None
    first_index: Optional[int] = None
    bbar_constant = sizes.holds
    for u in range(1, dd.n):
        current = proper_mean_matrices(dd, u)
        if current[1] != reference[1]:
            bbar_constant = False
        if first is None:
            differences = []
            for i in range(dd.D + 1):
                position = _first_difference(reference_arrays[i], np.array(current[i].tolist(), dtype=object))
                if position is not None:
                    h, j = position
                    differences.append((h, i, j))
            if differences:
                h, i, j = min(differences)
                first_index = min(d[1] for d in differences)
                first = Witness((0, u), (h, i, j), reference[i][h, j], current[i][h, j],
                                f"(B_{i})[{h},{j}] differs between vertices 0 and {u}")
        if first is not None and not bbar_constant:
            break

    if first is not None:
        logger.info(f"Not distance mean-regular: {first.description}")
        if bbar_constant:
            logger.warning("Mean-matrix B is vertex-independent but a higher proper mean-matrix is not")
        return DmrResult(
            Verdict(False, f"proper mean-matrix B_{first_index} is not vertex-independent", first),
            first_differing_index=first_index,
            mean_matrix_constant=bbar_constant,
        )
    if not sizes.holds:
        raise ConsistencyError("identical mean-matrices with different shell sizes", check="dmr",
                               details=sizes.reason)

    profile = DmrProfile(dd.D, dd.shell_sizes(0), dd.n, reference[1], reference)
    profile.validate()
    tight = _tight_interlacing(dd, tol, cluster_tol) if interlacing else None
    return DmrResult(Verdict(True, "all proper mean-matrices agree across vertices"), profile, tight,
                     mean_matrix_constant=True)


def spectral_obstruction(dd: DistanceData, spectrum: SpectralData) -> Optional[str]:
    """A distance-regular graph has exactly D+1 distinct eigenvalues."""
    if spectrum.distinct != dd.D + 1:
        return f"D={dd.D} but {spectrum.distinct} distinct eigenvalues"
    return None


@log_function_call(logger)
def is_distance_regular(dd: DistanceData, spectrum: Optional[SpectralData] = None) -> Verdict:
    """
    Brute force: |Gamma_i(u) & Gamma_j(v)| must depend only on (dist(u, v), i, j).

    (A_i A_j)[u, v] counts exactly that intersection, so each product is scanned
    over the positions of A_h.
    """
    size = dd.D + 1
    mats = dd.distance_matrices
    witness = None
    for i in range(size):
        for j in range(size):
            product = mats[i] @ mats[j]
            for h in range(size):
                positions = np.argwhere(mats[h] == 1)
                values = product[mats[h] == 1]
                bad = np.flatnonzero(values != values[0])
                if bad.size:
                    u0, v0 = (int(x) for x in positions[0])
                    u1, v1 = (int(x) for x in positions[bad[0]])
                    candidate = Witness((u0, v0, u1, v1), (h, i, j), int(values[0]), int(values[bad[0]]),
                                        f"p_{i}{j}^{h} differs between pairs ({u0},{v0}) and ({u1},{v1})")
                    if witness is None or candidate.indices < witness.indices:
                        witness = candidate
    obstruction = spectral_obstruction(dd, spectrum) if spectrum is not None else None
    if witness is None:
        if obstruction:
            raise ConsistencyError("intersection numbers are constant but the spectrum is too large",
                                   check="distance_regular", details=obstruction)
        return Verdict(True, "intersection numbers depend only on distances")
    return Verdict(False, obstruction or witness.description, witness)


def edge_counts(dd: DistanceData, u: int) -> OmegaTable:
    """
    omega_ij(u): edges with one end in Gamma_i(u) and the other in Gamma_j(u).

    Raises:
        ConsistencyError: if an edge joins shells more than one apart
    """
    size = dd.D + 1
    edges = np.array(sorted(dd.graph.edges), dtype=np.int64).reshape(-1, 2)
    du = dd.dist[u]
    x, y = du[edges[:, 0]], du[edges[:, 1]]
    if np.any(np.abs(x - y) > 1):
        raise ConsistencyError("edge joins non-adjacent distance shells", check="edge_counts", details=u)
    same = x == y
    diagonal = np.bincount(x[same], minlength=size)
    band = np.bincount(np.minimum(x, y)[~same], minlength=size)
    table = OmegaTable(tuple(int(v) for v in diagonal), tuple(int(v) for v in band[:dd.D]))
    if table.omega(0, 0) != 0 or (dd.D >= 1 and table.omega(0, 1) != dd.graph.degree(u)):
        raise ConsistencyError("omega_00 must vanish and omega_01 must be the degree", check="edge_counts")
    return table


def omega_reconstruction(table: OmegaTable) -> Tuple[Tuple[Rational, ...], ...]:
    """(k, a, b, c) recovered from well-defined omega: a_i = 2w_ii/k_i, b_i = w_(i,i+1)/k_i, c_i = w_(i-1,i)/k_i."""
    D = len(table.band)
    degree = table.omega(0, 1)
    k: List[Rational] = [1]
    for i in range(1, D + 1):
        below = table.omega(i - 1, i)
        above = table.omega(i, i + 1) if i < D else 0
        k.append(to_rational(Fraction(below + 2 * table.omega(i, i) + above, degree)))
    a = tuple(to_rational(Fraction(2 * table.omega(i, i)) / k[i]) for i in range(D + 1))
    b = tuple(to_rational(Fraction(table.omega(i, i + 1)) / k[i]) for i in range(D))
    c = tuple(to_rational(Fraction(table.omega(i - 1, i)) / k[i]) for i in range(1, D + 1))
    return tuple(k), a, b, c


def omega_characterization(dd: DistanceData, profile: Optional[DmrProfile] = None
                           ) -> Tuple[Verdict, Optional[OmegaTable]]:
    """
    omega_ij well defined for all i, j; with a profile the reconstructed parameters must match it.

    Raises:
        ConsistencyError: if the reconstruction disagrees with the profile
    """
    ecc = eccentricity_check(dd)
    if not ecc.holds:
        return ecc, None
    reference = edge_counts(dd, 0)
    for u in range(1, dd.n):
        table = edge_counts(dd, u)
        if table != reference:
            for i in range(dd.D + 1):
                for j in (i, i + 1):
                    if j <= dd.D and table.omega(i, j) != reference.omega(i, j):
                        return Verdict(False, f"omega_{i}{j} is not vertex-independent",
                                       Witness((0, u), (i, j), reference.omega(i, j), table.omega(i, j),
                                               f"omega_{i}{j} differs between vertices 0 and {u}")), None
    if profile is not None:
        k, a, b, c = omega_reconstruction(reference)
        if k != tuple(profile.k) or a != profile.abar or b != profile.bbar or c != profile.cbar:
            raise ConsistencyError("omega reconstruction disagrees with the profile", check="omega",
                                   details={"k": k, "a": a, "b": b, "c": c})
    return Verdict(True, "edge counts between shells are vertex-independent"), reference


def omega_diagonal_check(dd: DistanceData) -> Verdict:
    """omega_ii well defined for every i."""
    ecc = eccentricity_check(dd)
    if not ecc.holds:
        return ecc
    reference = edge_counts(dd, 0).diagonal
    for u in range(1, dd.n):
        diagonal = edge_counts(dd, u).diagonal
        if diagonal != reference:
            i = next(i for i, (x, y) in enumerate(zip(reference, diagonal)) if x != y)
            return Verdict(False, f"omega_{i}{i} is not vertex-independent",
                           Witness((0, u), (i, i), reference[i], diagonal[i], "edges inside a shell"))
    return Verdict(True, "edge counts inside shells are vertex-independent")


def triple_counts(dd: DistanceData, u: int) -> np.ndarray:
    """
    t_hij(u) = sum over v in Gamma_h(u) of |Gamma_j(v) & Gamma_i(u)|.

    Counted once over pairs (v, w) and once shell by shell over w in Gamma_i(u).

    Raises:
        ConsistencyError: if the two summation orders disagree
    """
    size = dd.D + 1
    du = dd.dist[u]
    keys = (du[:, None] * size + du[None, :]) * size + dd.dist
    by_pairs = np.bincount(keys.ravel(), minlength=size ** 3).reshape(size, size, size)

    by_shells = np.zeros((size, size, size), dtype=np.int64)
    for i in range(size):
        for w in dd.shells[u][i]:
            column = np.bincount(du * size + dd.dist[:, w], minlength=size * size).reshape(size, size)
            by_shells[:, i, :] += column
    if not np.array_equal(by_pairs, by_shells):
        raise ConsistencyError("triple counts depend on the summation order", check="triple_counts",
                               details=u)
    return by_pairs


def triple_characterization(dd: DistanceData, profile: Optional[DmrProfile] = None) -> Verdict:
    """
    t_hij well defined for all h, i, j; with a profile, t_hij / k_h must equal p_ji^h.

    Raises:
        ConsistencyError: if the ratios disagree with the profile
    """
    reference = triple_counts(dd, 0)
    for u in range(1, dd.n):
        table = triple_counts(dd, u)
        position = _first_difference(reference, table)
        if position is not None:
            h, i, j = position
            return Verdict(False, f"t_{h}{i}{j} is not vertex-independent",
                           Witness((0, u), position, int(reference[position]), int(table[position]),
                                   f"t_{h}{i}{j} differs between vertices 0 and {u}"))
    if profile is not None:
        size = profile.D + 1
        for h in range(size):
            for i in range(size):
                for j in range(size):
                    ratio = to_rational(Fraction(int(reference[h, i, j]), profile.k[h]))
                    if ratio != profile.mean_number(h, j, i):
                        raise ConsistencyError("t_hij / k_h disagrees with the mean numbers", check="triples",
                                               details=(h, i, j))
    return Verdict(True, "triple counts are vertex-independent")


def hadamard_characterization(dd: DistanceData) -> Tuple[Verdict, Optional[np.ndarray]]:
    """
    A_i A_j o A_h must have constant row sums and constant column sums for every (h, i, j).

    Returns:
        (verdict, coefficients) where coefficients[h, i, j] = row sum / k_h, which must equal the
        Fourier coefficient sum(A_i A_j o A_h) / sum(A_h)

    Raises:
        ConsistencyError: if a coefficient disagrees with the Fourier route or is not symmetric in i, j
    """
    size = dd.D + 1
    mats = dd.distance_matrices
    row_sums = np.zeros((size, size, size), dtype=np.int64)
    totals = np.zeros((size, size, size), dtype=np.int64)
    failure: Optional[Verdict] = None
    for i in range(size):
        for j in range(size):
            product = mats[i] @ mats[j]
            for h in range(size):
                m = product * mats[h]
                rows, cols = m.sum(axis=1), m.sum(axis=0)
                bad_row = np.flatnonzero(rows != rows[0])
                bad_col = np.flatnonzero(cols != cols[0])
                if bad_row.size or bad_col.size:
                    candidate = (h, i, j)
                    if failure is None or candidate < failure.witness.indices:
                        kind, bad, sums = ("row", bad_row, rows) if bad_row.size else ("column", bad_col, cols)
                        v = int(bad[0])
                        failure = Verdict(
                            False,
                            f"A_{i}A_{j} o A_{h} has non-constant {kind} sums",
                            Witness((0, v), candidate, int(sums[0]), int(sums[v]),
                                    f"{kind} sums of A_{i}A_{j} o A_{h} differ at vertices 0 and {v}"),
                        )
                    continue
                row_sums[h, i, j] = rows[0]
                totals[h, i, j] = m.sum()
    if failure is not None:
        return failure, None

    # constant row sums of A_h A_0 o A_h = A_h make k_h well defined here
    k = [int(mats[h][0].sum()) for h in range(size)]
    coefficients = np.empty((size, size, size), dtype=object)
    for h in range(size):
        for i in range(size):
            for j in range(size):
                coefficient = to_rational(Fraction(int(row_sums[h, i, j]), k[h]))
                fourier = to_rational(Fraction(int(totals[h, i, j]), int(mats[h].sum())))
                if coefficient != fourier:
                    raise ConsistencyError("row-sum coefficient disagrees with the Fourier coefficient",
                                           check="hadamard", details=(h, i, j))
                coefficients[h, i, j] = coefficient
    for h in range(size):
        for i in range(size):
            for j in range(size):
                if coefficients[h, i, j] != coefficients[h, j, i]:
                    raise ConsistencyError("Hadamard coefficients are not symmetric", check="hadamard",
                                           details=(h, i, j))
    return Verdict(True, "every A_i A_j o A_h has constant row and column sums"), coefficients


@log_function_call(logger)
def classify(
    dd: DistanceData,
    spectrum: Optional[SpectralData] = None,
    tol: float = DEFAULT_TOL,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
) -> Classification:
    """
    Run every characterization and place the graph in the hierarchy
    distance-regular => distance mean-regular => super-regular.

    Raises:
        ConsistencyError: if the characterizations disagree or an implication fails
    """
    if spectrum is None:
        spectrum = real_eigenvalues(dd.adjacency, tol=tol, cluster_tol=cluster_tol)
    super_regular = super_regular_check(dd)
    drg = is_distance_regular(dd, spectrum)
    result = is_distance_mean_regular(dd, tol, cluster_tol)
    dmr = result.verdict

    if result.verdict.reason == "eccentricity":
        characterizations = {"quotient": False}
    else:
        omega, _ = omega_characterization(dd, result.profile)
        triples = triple_characterization(dd, result.profile)
        hadamard, _ = hadamard_characterization(dd)
        characterizations = {
            "quotient": dmr.holds,
            "triples": triples.holds,
            "hadamard": hadamard.holds,
            "omega": omega.holds,
        }
        if super_regular.holds:
            characterizations["omega_diagonal"] = omega_diagonal_check(dd).holds
        for name in ("triples", "hadamard"):
            if characterizations[name] != dmr.holds:
                raise ConsistencyError(f"{name} characterization disagrees with the quotient test",
                                       check="classify", details=characterizations)
        for name in ("omega", "omega_diagonal"):
            if name in characterizations and characterizations[name] != result.mean_matrix_constant:
                raise ConsistencyError(f"{name} characterization disagrees with the mean-matrix test",
                                       check="classify", details=characterizations)

    if drg.holds and not dmr.holds:
        raise ConsistencyError("distance-regular graph classified as not distance mean-regular", check="classify")
    if dmr.holds and not super_regular.holds:
        raise ConsistencyError("distance mean-regular graph is not super-regular", check="classify")
    if result.tight_interlacing and not drg.holds:
        raise ConsistencyError("tight interlacing on a graph that is not distance-regular", check="classify")

    logger.info(f"Classification: DRG={drg.holds}, DMR={dmr.holds}, super-regular={super_regular.holds}")
    return Classification(
        distance_regular=drg,
        distance_mean_regular=dmr,
        super_regular=super_regular,
        characterizations=characterizations,
        tight_interlacing=result.tight_interlacing,
        mean_matrix_constant=result.mean_matrix_constant,
        profile=result.profile,
        first_differing_index=result.first_differing_index,
    )
