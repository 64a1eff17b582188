#!/usr/bin/env python3
"""
The star product on span(A_0..A_D) and the algebra diagnostics built on it.

A_i * A_j = sum over h of p_ij^h A_h, the orthogonal projection of A_i A_j onto
the span of the distance matrices. All checks scan index tuples exhaustively
and report the lexicographically first violation.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from dmr_graphs.analysis import DmrProfile, Verdict, Witness
from dmr_graphs.config_model import PolynomialSettings
from dmr_graphs.errors import ConsistencyError, DimensionMismatchError
from dmr_graphs.graph import DistanceData
from dmr_graphs.linalg import (
    Rational,
    RationalMatrix,
    flatten,
    minimal_polynomial_degree,
    solve_combination,
    to_rational,
)
from dmr_graphs.polynomials import MeanPolySystem, star_inner
from dmr_graphs.utils.logging import get_logger, log_function_call

logger = get_logger(__name__)


@dataclass(frozen=True)
class StarElement:
    """X = sum of x_i A_i over the distance matrices."""

    coeffs: Tuple[Rational, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(to_rational(c) for c in self.coeffs))

    @classmethod
    def basis(cls, i: int, size: int) -> "StarElement":
        return cls(tuple(1 if h == i else 0 for h in range(size)))

    def to_matrix(self, dd: DistanceData) -> RationalMatrix:
        if len(self.coeffs) != dd.D + 1:
            raise DimensionMismatchError("element size must be D+1", operation="to_matrix",
                                         left_shape=(len(self.coeffs),), right_shape=(dd.D + 1,))
        total = RationalMatrix.zeros(dd.n, dd.n)
        for x, a in zip(self.coeffs, dd.rational_distance_matrices):
            if x != 0:
                total = total + a * x
        return total


def fourier_coefficient(m: RationalMatrix, dd: DistanceData, h: int) -> Rational:
    """<M, A_h> / ||A_h||^2 = sum(M o A_h) / sum(A_h), exactly."""
    if m.shape != (dd.n, dd.n):
        raise DimensionMismatchError("matrix must be n x n", operation="fourier_coefficient",
                                     left_shape=m.shape, right_shape=(dd.n, dd.n))
    a_h = dd.distance_matrices[h]
    ints = m.as_integer_array()
    if ints is not None:
        numerator = int((ints * a_h).sum())
    else:
        numerator = m.hadamard(dd.distance_matrix(h)).sum_entries()
    return to_rational(Fraction(numerator) / int(a_h.sum()))


def star_product(x: StarElement, y: StarElement, profile: DmrProfile,
                 dd: Optional[DistanceData] = None) -> StarElement:
    """
    (X * Y)_h = sum over i, j of x_i y_j p_ij^h.

    With distance data the result is also checked against the projection of the
    ordinary product X Y onto the distance matrices.

    Raises:
        ConsistencyError: if the two routes differ
    """
    size = profile.D + 1
    if len(x.coeffs) != size or len(y.coeffs) != size:
        raise DimensionMismatchError("star product operands must have D+1 coordinates", operation="star_product",
                                     left_shape=(len(x.coeffs),), right_shape=(len(y.coeffs),))
    out = []
    for h in range(size):
        total = 0
        for i, xi in enumerate(x.coeffs):
            if xi == 0:
                continue
            for j, yj in enumerate(y.coeffs):
                if yj != 0:
                    total += xi * yj * profile.mean_number(h, i, j)
        out.append(total)
    result = StarElement(tuple(out))
    if dd is not None:
        ordinary = x.to_matrix(dd) @ y.to_matrix(dd)
        projected = tuple(fourier_coefficient(ordinary, dd, h) for h in range(size))
        if projected != result.coeffs:
            raise ConsistencyError("star product differs from the projected ordinary product",
                                   check="star_product", details={"star": result.coeffs, "projected": projected})
    return result


def commutativity_check(mats: Sequence[RationalMatrix]) -> Verdict:
    """Pairwise M_i M_j == M_j M_i; witness (i, j, row, col)."""
    for m in mats:
        if not m.is_square or m.shape != mats[0].shape:
            raise DimensionMismatchError("matrices must be square of one size", operation="commutativity_check",
                                         left_shape=mats[0].shape, right_shape=m.shape)
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            left, right = mats[i] @ mats[j], mats[j] @ mats[i]
            if left != right:
                r, c = next((r, c) for r in range(left.rows) for c in range(left.cols) if left[r, c] != right[r, c])
                return Verdict(False, f"matrices {i} and {j} do not commute",
                               Witness((), (i, j, r, c), left[r, c], right[r, c],
                                       f"(M_{i} M_{j})[{r},{c}] != (M_{j} M_{i})[{r},{c}]"))
    return Verdict(True, "all pairs commute")


def _table(profile: DmrProfile) -> np.ndarray:
    return profile.mean_numbers()


def associativity_check(profile: DmrProfile) -> Verdict:
    """
    (A_i * A_j) * A_k == A_i * (A_j * A_k) for all i, j, k.

    The coefficient of A_l on the left is (B_k B_i)[l, j] and on the right (B_i B_k)[l, j].
    """
    p = _table(profile)
    size = profile.D + 1
    for i, j, k in product(range(size), repeat=3):
        for ell in range(size):
            left = sum(p[h, i, j] * p[ell, h, k] for h in range(size))
            right = sum(p[h, j, k] * p[ell, i, h] for h in range(size))
            if left != right:
                return Verdict(False, f"(A_{i} * A_{j}) * A_{k} != A_{i} * (A_{j} * A_{k})",
                               Witness((), (i, j, k, ell), to_rational(left), to_rational(right),
                                       f"coefficient of A_{ell} differs"))
    return Verdict(True, "star product is associative")


def representation_check(profile: DmrProfile) -> Verdict:
    """Psi(A_i * A_j) == Psi(A_i) Psi(A_j) with Psi(A_i) = B_i, i.e. B_i B_j == sum of p_ij^h B_h."""
    size = profile.D + 1
    mats = profile.proper_Bi
    for i, j in product(range(size), repeat=2):
        expansion = RationalMatrix.zeros(size, size)
        for h in range(size):
            coefficient = profile.mean_number(h, i, j)
            if coefficient != 0:
                expansion = expansion + mats[h] * coefficient
        direct = mats[i] @ mats[j]
        if direct != expansion:
            r, c = next((r, c) for r in range(size) for c in range(size) if direct[r, c] != expansion[r, c])
            return Verdict(False, f"B_{i} B_{j} differs from its expansion in the B_h",
                           Witness((), (i, j, r, c), expansion[r, c], direct[r, c],
                                   f"entry [{r},{c}] of B_{i} B_{j}"))
    return Verdict(True, "B_i B_j = sum over h of p_ij^h B_h")


def scheme_identity_check(profile: DmrProfile) -> Verdict:
    """sum over h of p_sh^r p_ij^h == sum over h of p_ih^r p_sj^h for all r, s, i, j."""
    p = _table(profile)
    size = profile.D + 1
    for r, s, i, j in product(range(size), repeat=4):
        left = sum(p[r, s, h] * p[h, i, j] for h in range(size))
        right = sum(p[r, i, h] * p[h, s, j] for h in range(size))
        if left != right:
            return Verdict(False, "structure constants violate the scheme identity",
                           Witness((), (r, s, i, j), to_rational(left), to_rational(right),
                                   f"identity fails at (r, s, i, j) = ({r}, {s}, {i}, {j})"))
    return Verdict(True, "scheme identity holds")


@dataclass(frozen=True)
class ExpansionReport:
    hypothesis_holds: bool
    product_expansion: Verdict
    recurrence: Verdict
    polynomial_form: Verdict
    residuals: Dict[int, RationalMatrix] = field(default_factory=dict)
    fourier_holds: Optional[bool] = None
    fourier_max_error: Optional[float] = None

    @property
    def holds(self) -> bool:
        return self.product_expansion.holds and self.recurrence.holds and self.polynomial_form.holds


def expansion_check(profile: DmrProfile, system: Optional[MeanPolySystem] = None,
                    settings: Optional[PolynomialSettings] = None) -> ExpansionReport:
    """
    Identities that follow from commuting proper mean-matrices, run whether or not they commute:
    B_i B_j = sum p_ij^h B_h, the three-term recurrence B B_i = b_(i-1) B_(i-1) + a_i B_i + c_(i+1) B_(i+1),
    B_i = p_i(B) and, with a polynomial system, p_ij^h = <p_i p_j, p_h> / <p_h, p_h>.
    """
    settings = settings or PolynomialSettings()
    size = profile.D + 1
    mats = profile.proper_Bi
    hypothesis = commutativity_check(mats).holds
    if not hypothesis:
        logger.info("Proper mean-matrices do not commute; expansion identities are reported, not expected")

    recurrence = Verdict(True, "B B_i follows the three-term recurrence")
    for i in range(size):
        rhs = mats[i] * profile.a(i)
        if i >= 1:
            rhs = rhs + mats[i - 1] * profile.b(i - 1)
        if i + 1 < size:
            rhs = rhs + mats[i + 1] * profile.c(i + 1)
        if profile.Bbar @ mats[i] != rhs:
            recurrence = Verdict(False, f"B B_{i} breaks the three-term recurrence", Witness((), (i,)))
            break

    residuals: Dict[int, RationalMatrix] = {}
    polynomial_form = Verdict(True, "B_i = p_i(B) for every i")
    fourier_holds = None
    fourier_error = None
    if system is not None:
        for i in range(size):
            residual = mats[i] - system.PofB[i]
            if not residual.is_zero():
                residuals[i] = residual
        if residuals:
            first = min(residuals)
            polynomial_form = Verdict(False, f"B_{first} differs from p_{first}(B)", Witness((), (first,)))
        fourier_error = 0.0
        for h, i, j in product(range(size), repeat=3):
            estimate = star_inner(system.polys[i] * system.polys[j], system.polys[h], system) / system.k[h]
            fourier_error = max(fourier_error, abs(estimate - float(profile.mean_number(h, i, j))))
        fourier_holds = fourier_error <= settings.fourier_tol

    return ExpansionReport(hypothesis, representation_check(profile), recurrence, polynomial_form, residuals,
                           fourier_holds, fourier_error)


@dataclass(frozen=True)
class SubalgebraReport:
    dim_mean: int
    dim_adjacency: int
    closed: bool
    memberships: Tuple[Tuple[int, int, bool], ...]
    images_consistent: bool
    witness: Optional[Witness] = None


def subalgebra_check(system: MeanPolySystem, dd: DistanceData) -> SubalgebraReport:
    """
    Express every product p_i(A) p_j(A) in the power basis I, A, ..., A^d and decide membership in
    span(p_0(A)..p_D(A)) exactly. For members, the coordinates over the p_h(A) are compared with those
    of p_i(B) p_j(B) over the p_h(B).

    Raises:
        ConsistencyError: if D exceeds d
    """
    a = dd.adjacency
    degree = minimal_polynomial_degree(a)
    D = system.D
    if D + 1 > degree:
        raise ConsistencyError("diameter exceeds the number of distinct eigenvalues minus one",
                               check="subalgebra", details=(D + 1, degree))
    powers = [RationalMatrix.identity(dd.n)]
    for _ in range(1, degree):
        powers.append(powers[-1] @ a)
    power_vectors = [flatten(p) for p in powers]
    mean_vectors = [flatten(m) for m in system.Abar]
    image_vectors = [flatten(m) for m in system.PofB]

    memberships = []
    images_consistent = True
    witness = None
    for i in range(D + 1):
        for j in range(i, D + 1):
            target = flatten(system.Abar[i] @ system.Abar[j])
            coordinates = solve_combination(power_vectors, target)
            if coordinates is None:
                raise ConsistencyError("product of polynomials in A escaped the adjacency algebra",
                                       check="subalgebra", details=(i, j))
            member = all(c == 0 for c in coordinates[D + 1:])
            memberships.append((i, j, member))
            if not member:
                if witness is None:
                    witness = Witness((), (i, j), None, None, f"p_{i}(A) p_{j}(A) leaves the span")
                continue
            over_mean = solve_combination(mean_vectors, target)
            over_images = solve_combination(image_vectors, flatten(system.PofB[i] @ system.PofB[j]))
            if over_mean != over_images:
                images_consistent = False
    closed = all(m for _, _, m in memberships)
    logger.debug(f"Subalgebra check: D+1={D + 1}, d+1={degree}, closed={closed}")
    return SubalgebraReport(D + 1, degree, closed, tuple(memberships), images_consistent, witness)


@dataclass(frozen=True)
class AlgebraReport:
    dim_Dbar: int
    dim_A: int
    Bi_commute: Verdict
    Ai_commute: Verdict
    star_associative: Verdict
    scheme_identity: Verdict
    expansion: ExpansionReport
    subalgebra: Optional[SubalgebraReport] = None

    @property
    def witnesses(self) -> Dict[str, Witness]:
        pairs = (
            ("Bi_commute", self.Bi_commute),
            ("Ai_commute", self.Ai_commute),
            ("star_associative", self.star_associative),
            ("scheme_identity", self.scheme_identity),
            ("BiBj_expansion", self.expansion.product_expansion),
            ("recurrence", self.expansion.recurrence),
            ("polynomial_form", self.expansion.polynomial_form),
        )
        return {name: v.witness for name, v in pairs if v.witness is not None}


@log_function_call(logger)
def build_algebra_report(profile: DmrProfile, dd: DistanceData, system: Optional[MeanPolySystem] = None,
                         settings: Optional[PolynomialSettings] = None) -> AlgebraReport:
    """
    Run every algebra check.

    Raises:
        ConsistencyError: if associativity disagrees with commutativity of the B_i
    """
    b_commute = commutativity_check(profile.proper_Bi)
    a_commute = commutativity_check(dd.rational_distance_matrices)
    associative = associativity_check(profile)
    scheme = scheme_identity_check(profile)
    expansion = expansion_check(profile, system, settings)
    subalgebra = subalgebra_check(system, dd) if system is not None else None
    dim_a = subalgebra.dim_adjacency - 1 if subalgebra else minimal_polynomial_degree(dd.adjacency) - 1

    if associative.holds != b_commute.holds:
        raise ConsistencyError("associativity disagrees with commutativity of the proper mean-matrices",
                               check="algebra")
    if a_commute.holds != b_commute.holds:
        logger.warning("Commutativity of the distance matrices and of the proper mean-matrices differ")
    if scheme.holds != b_commute.holds:
        logger.warning("Scheme identity and commutativity of the proper mean-matrices differ")
    return AlgebraReport(profile.D, dim_a, b_commute, a_commute, associative, scheme, expansion, subalgebra)
