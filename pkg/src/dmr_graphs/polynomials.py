#!/usr/bin/env python3
"""
Distance mean-polynomials and their weights.

The polynomials come from the three-term recurrence
    x p_i = b_(i-1) p_(i-1) + a_i p_i + c_(i+1) p_(i+1),   p_0 = 1, p_1 = x
and are exact. Everything that depends on the eigenvalues mu_0 > ... > mu_D of
the mean-matrix (products pi_i, pseudo-multiplicities w_i, the star inner
product) is floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from dmr_graphs.analysis import DmrProfile
from dmr_graphs.config_model import PolynomialSettings, SpectralSettings
from dmr_graphs.errors import ConsistencyError, DegenerateEvaluationError
from dmr_graphs.graph import DistanceData
from dmr_graphs.linalg import RationalMatrix, RationalPoly, poly_eval_matrix
from dmr_graphs.spectra import SpectralData, real_eigenvalues
from dmr_graphs.utils.logging import get_logger, log_function_call

logger = get_logger(__name__)


@dataclass(frozen=True)
class MeanPolySystem:
    polys: Tuple[RationalPoly, ...]
    mu: SpectralData
    pi_prods: Tuple[float, ...]
    w: Tuple[float, ...]
    christoffel: Tuple[float, ...]
    Abar: Tuple[RationalMatrix, ...]
    PofB: Tuple[RationalMatrix, ...]
    n: int
    k: Tuple[int, ...]

    @property
    def D(self) -> int:
        return len(self.polys) - 1

    def gram_matrix(self) -> np.ndarray:
        size = len(self.polys)
        return np.array([[star_inner(self.polys[i], self.polys[j], self) for j in range(size)]
                         for i in range(size)])

    def validate(self, settings: Optional[PolynomialSettings] = None) -> None:
        """
        Raises:
            ConsistencyError: naming the first identity that fails
        """
        settings = settings or PolynomialSettings()
        lam0 = self.k[1] if self.D >= 1 else 0
        for i, p in enumerate(self.polys):
            if p.degree != i:
                raise ConsistencyError(f"p_{i} has degree {p.degree}", check="polynomials")
            if p(lam0) != self.k[i]:
                raise ConsistencyError(f"p_{i}(k) != k_{i}", check="polynomials", details=p(lam0))
            if i >= 2 and p.leading <= 0:
                raise ConsistencyError(f"p_{i} has a non-positive leading coefficient", check="polynomials")
            row_sums = set(self.Abar[i].row_sums())
            if row_sums != {self.k[i]}:
                raise ConsistencyError(f"row sums of the mean distance matrix {i} are not k_{i}",
                                       check="polynomials", details=sorted(row_sums))
        if abs(sum(self.w) - self.n) > settings.gram_tol:
            raise ConsistencyError("pseudo-multiplicities do not sum to n", check="polynomials",
                                   details=sum(self.w))
        if abs(self.w[0] - 1) > settings.degenerate_tol:
            raise ConsistencyError("w_0 must be 1", check="polynomials", details=self.w[0])
        if max(abs(x - y) for x, y in zip(self.w, self.christoffel)) > settings.gram_tol:
            raise ConsistencyError("product and Christoffel weights disagree", check="polynomials",
                                   details={"w": self.w, "christoffel": self.christoffel})
        gram = self.gram_matrix()
        expected = np.diag([float(x) for x in self.k])
        if np.abs(gram - expected).max() > settings.gram_tol:
            raise ConsistencyError("mean-polynomials are not orthogonal with norms k_i", check="polynomials",
                                   details=gram.tolist())


@dataclass(frozen=True)
class RecurrenceReport:
    holds: bool
    failing_index: Optional[int]
    residual_at_D: RationalMatrix
    truncates_cleanly: bool


def build_polynomials(profile: DmrProfile) -> Tuple[RationalPoly, ...]:
    """
    p_(i+1) = ((x - a_i) p_i - b_(i-1) p_(i-1)) / c_(i+1) for i = 1..D-1.

    Raises:
        DegenerateEvaluationError: if some c_i vanishes
    """
    for i in range(1, profile.D + 1):
        if profile.c(i) == 0:
            raise DegenerateEvaluationError("zero c_i in the three-term recurrence", index=i, value=0)
    x = RationalPoly.x()
    polys = [RationalPoly.constant(1)]
    if profile.D >= 1:
        polys.append(x)
    for i in range(1, profile.D):
        nxt = (x - profile.a(i)) * polys[i] - polys[i - 1] * profile.b(i - 1)
        polys.append(nxt / profile.c(i + 1))
    leading = Fraction(1)
    for i, p in enumerate(polys):
        if i >= 1:
            leading /= profile.c(i)
        if p.leading != leading:
            raise ConsistencyError(f"p_{i} has leading coefficient {p.leading}, expected {leading}",
                                   check="polynomials")
    return tuple(polys)


def pi_products(mu: Sequence[float]) -> Tuple[float, ...]:
    """pi_i = product over j != i of |mu_i - mu_j|."""
    return tuple(float(np.prod([abs(a - b) for j, b in enumerate(mu) if j != i])) for i, a in enumerate(mu))


def pseudo_multiplicities(
    polys: Sequence[RationalPoly],
    mu: Sequence[float],
    degenerate_tol: float = 1e-9,
) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
    """
    w_i = pi_0 p_D(mu_0) / (pi_i |p_D(mu_i)|).

    p_D(mu_i) alternates in sign along i, so its absolute value pairs with the
    absolute differences inside pi_i.

    Returns:
        (pi, w)

    Raises:
        DegenerateEvaluationError: if |p_D(mu_i)| < degenerate_tol
    """
    top = polys[-1]
    values = [top.evaluate_float(m) for m in mu]
    for i, v in enumerate(values):
        if abs(v) < degenerate_tol:
            raise DegenerateEvaluationError("degenerate evaluation of the top mean-polynomial", index=i, value=v)
    pi = pi_products(mu)
    w = tuple(pi[0] * values[0] / (pi[i] * abs(values[i])) for i in range(len(mu)))
    return pi, w


def christoffel_weights(polys: Sequence[RationalPoly], mu: Sequence[float], k: Sequence[int], n: int
                        ) -> Tuple[float, ...]:
    """w_i = n / sum over h of p_h(mu_i)^2 / k_h."""
    return tuple(n / sum(p.evaluate_float(m) ** 2 / kh for p, kh in zip(polys, k)) for m in mu)


def star_inner(f: RationalPoly, g: RationalPoly, sys: MeanPolySystem) -> float:
    """<f, g> = (1/n) sum over i of w_i f(mu_i) g(mu_i)."""
    return sum(w * f.evaluate_float(m) * g.evaluate_float(m) for w, m in zip(sys.w, sys.mu.eigenvalues)) / sys.n


def build_matrices(polys: Sequence[RationalPoly], adjacency: RationalMatrix, Bbar: RationalMatrix
                   ) -> Tuple[Tuple[RationalMatrix, ...], Tuple[RationalMatrix, ...]]:
    """(p_i(A) for all i, p_i(B) for all i), exactly."""
    abar = tuple(poly_eval_matrix(p, adjacency) for p in polys)
    pofb = tuple(poly_eval_matrix(p, Bbar) for p in polys)
    return abar, pofb


def mean_spectrum(profile: DmrProfile, settings: Optional[SpectralSettings] = None) -> SpectralData:
    """
    Eigenvalues of the mean-matrix, symmetrized with diag(k).

    Raises:
        DegenerateEvaluationError: if clustering merged eigenvalues of the tridiagonal mean-matrix
    """
    settings = settings or SpectralSettings()
    mu = real_eigenvalues(profile.Bbar, sym_witness=profile.k, tol=settings.tol, cluster_tol=settings.cluster_tol)
    if mu.distinct != profile.D + 1:
        raise DegenerateEvaluationError("mean-matrix eigenvalues merged under clustering", value=mu.eigenvalues)
    return mu


@log_function_call(logger)
def build_system(
    profile: DmrProfile,
    dd: DistanceData,
    settings: Optional[PolynomialSettings] = None,
    spectral: Optional[SpectralSettings] = None,
) -> MeanPolySystem:
    """
    Polynomials, spectrum of the mean-matrix, weights and matrix evaluations, validated.

    Raises:
        DegenerateEvaluationError: zero c_i, merged eigenvalues or a vanishing p_D(mu_i)
        ConsistencyError: if an identity of the system fails
    """
    settings = settings or PolynomialSettings()
    polys = build_polynomials(profile)
    mu = mean_spectrum(profile, spectral)
    pi, w = pseudo_multiplicities(polys, mu.eigenvalues, settings.degenerate_tol)
    christoffel = christoffel_weights(polys, mu.eigenvalues, profile.k, dd.n)
    abar, pofb = build_matrices(polys, dd.adjacency, profile.Bbar)
    system = MeanPolySystem(polys, mu, pi, w, christoffel, abar, pofb, dd.n, tuple(profile.k))
    system.validate(settings)
    logger.info(f"Mean-polynomials built: D={profile.D}, w={[round(x, 6) for x in w]}")
    return system


def recurrence_check(sys: MeanPolySystem, dd: DistanceData, profile: DmrProfile) -> RecurrenceReport:
    """
    A p_i(A) = b_(i-1) p_(i-1)(A) + a_i p_i(A) + c_(i+1) p_(i+1)(A) for i < D, exactly;
    at i = D the residual of the truncated right-hand side (c_(D+1) = 0) is reported.
    """
    a = dd.adjacency
    zero = RationalMatrix.zeros(dd.n, dd.n)
    failing = None
    for i in range(profile.D):
        rhs = sys.Abar[i] * profile.a(i) + sys.Abar[i + 1] * profile.c(i + 1)
        if i >= 1:
            rhs = rhs + sys.Abar[i - 1] * profile.b(i - 1)
        if a @ sys.Abar[i] != rhs:
            failing = i
            break
    D = profile.D
    rhs = sys.Abar[D] * profile.a(D)
    if D >= 1:
        rhs = rhs + sys.Abar[D - 1] * profile.b(D - 1)
    residual = a @ sys.Abar[D] - rhs
    return RecurrenceReport(failing is None, failing, residual, residual == zero)
