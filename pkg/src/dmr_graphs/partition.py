#!/usr/bin/env python3
"""
Vertex partitions, characteristic matrices and quotient matrices.

For a partition U_1..U_m with characteristic matrix T (n x m) and
D = diag(|U_1|..|U_m|), the quotient of A is B = S^T A T with S = T D^-1; its
(i, j) entry is the average row sum of the block A[U_i, U_j].
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from dmr_graphs.errors import (
    ConsistencyError,
    DimensionMismatchError,
    EccentricityError,
    GraphValidationError,
)
from dmr_graphs.graph import DistanceData
from dmr_graphs.linalg import RationalMatrix, to_rational
from dmr_graphs.spectra import DEFAULT_CLUSTER_TOL, DEFAULT_TOL, SpectralData, real_eigenvalues
from dmr_graphs.utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_INTERLACING_TOL = 1e-6


@dataclass(frozen=True)
class Partition:
    """Ordered partition of the vertex set into non-empty classes."""

    classes: Tuple[Tuple[int, ...], ...]

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    @property
    def m(self) -> int:
        return len(self.classes)

    def validate(self, n: int) -> None:
        """
        Raises:
            GraphValidationError: empty class, overlapping classes or classes not covering 0..n-1
        """
        seen = set()
        for index, cls in enumerate(self.classes):
            if not cls:
                raise GraphValidationError("partition classes must be non-empty", field_name="classes",
                                           actual_value=index)
            for v in cls:
                if not 0 <= v < n:
                    raise GraphValidationError("partition refers to an unknown vertex", field_name="classes",
                                               expected=f"0..{n - 1}", actual_value=v)
                if v in seen:
                    raise GraphValidationError("partition classes overlap", field_name="classes", actual_value=v)
                seen.add(v)
        if len(seen) != n:
            raise GraphValidationError("partition does not cover every vertex", field_name="classes",
                                       expected=str(n), actual_value=len(seen))

    def class_of(self) -> np.ndarray:
        """Class index of every vertex."""
        labels = np.empty(sum(self.sizes), dtype=np.int64)
        for index, cls in enumerate(self.classes):
            labels[list(cls)] = index
        return labels


def distance_partition(dd: DistanceData, u: int) -> Partition:
    """Gamma_0(u), Gamma_1(u), ..., Gamma_ecc(u)(u)."""
    if not 0 <= u < dd.n:
        raise GraphValidationError("unknown vertex", field_name="u", expected=f"0..{dd.n - 1}", actual_value=u)
    return Partition(tuple(shell for shell in dd.shells[u] if shell))


def characteristic_matrices(p: Partition, n: int) -> Tuple[RationalMatrix, RationalMatrix, RationalMatrix]:
    """
    Characteristic matrix T, normalized matrix S = T D^-1 and D = T^T T.

    Raises:
        GraphValidationError: if p is not a partition of 0..n-1
        ConsistencyError: if S^T T is not the identity
    """
    p.validate(n)
    t = np.zeros((n, p.m), dtype=np.int64)
    for index, cls in enumerate(p.classes):
        t[list(cls), index] = 1
    T = RationalMatrix.from_integers(t)
    s = np.empty((n, p.m), dtype=object)
    for index, size in enumerate(p.sizes):
        s[:, index] = [Fraction(int(x), size) for x in t[:, index]]
    S = RationalMatrix(s)
    D = RationalMatrix.diag(p.sizes)
    if S.T @ T != RationalMatrix.identity(p.m):
        raise ConsistencyError("S^T T is not the identity", check="characteristic_matrices")
    return T, S, D


@dataclass(frozen=True)
class InterlacingResult:
    holds: bool
    tight: bool
    split: Optional[int]
    theta: Tuple[float, ...]
    mu: SpectralData


@dataclass(frozen=True)
class QuotientResult:
    B: RationalMatrix
    T: RationalMatrix
    S: RationalMatrix
    equitable: bool
    interlacing: Optional[InterlacingResult] = None


def interlace(theta: Sequence[float], mu: Sequence[float], tol: float = DEFAULT_INTERLACING_TOL
              ) -> Tuple[bool, bool, Optional[int]]:
    """
    Compare host eigenvalues theta_1 >= ... >= theta_n with quotient eigenvalues mu_1 >= ... >= mu_m.

    Returns:
        (holds, tight, split): interlacing theta_i >= mu_i >= theta_(n-m+i) within tol, and the
        smallest k with mu_i = theta_i for i <= k and mu_i = theta_(n-m+i) for i > k, if any
    """
    theta = sorted(theta, reverse=True)
    mu = sorted(mu, reverse=True)
    n, m = len(theta), len(mu)
    if m > n:
        raise DimensionMismatchError("quotient has more eigenvalues than its host", operation="interlace",
                                     left_shape=(n,), right_shape=(m,))
    holds = all(theta[i] + tol >= mu[i] >= theta[n - m + i] - tol for i in range(m))
    split = None
    for k in range(m + 1):
        head = all(abs(mu[i] - theta[i]) <= tol for i in range(k))
        if not head:
            break
        if all(abs(mu[i] - theta[n - m + i]) <= tol for i in range(k, m)):
            split = k
            break
    return holds, split is not None, split


def quotient_matrix(
    a: RationalMatrix,
    p: Partition,
    theta: Optional[SpectralData] = None,
    tol: float = DEFAULT_TOL,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    interlacing_tol: float = DEFAULT_INTERLACING_TOL,
    compute_interlacing: bool = True,
) -> QuotientResult:
    """
    Quotient B = S^T A T with exact equitability and eigenvalue interlacing.

    Args:
        a: Symmetric n x n matrix
        p: Partition of 0..n-1
        theta: Spectrum of a, when already known
        compute_interlacing: Skip the floating part entirely when False

    Raises:
        DimensionMismatchError: if a is not square or does not match the partition
        ConsistencyError: if the interlacing is tight but the partition is not equitable
    """
    if not a.is_square:
        raise DimensionMismatchError("quotient requires a square matrix", operation="quotient_matrix",
                                     left_shape=a.shape)
    n = a.rows
    if sum(p.sizes) != n:
        raise DimensionMismatchError("partition size does not match the matrix", operation="quotient_matrix",
                                     left_shape=a.shape, right_shape=(sum(p.sizes),))
    T, S, _ = characteristic_matrices(p, n)

    ints = a.as_integer_array()
    if ints is not None:
        at = ints @ T.as_integer_array()
        block_sums = T.as_integer_array().T @ at
        b = np.empty((p.m, p.m), dtype=object)
        for i, size in enumerate(p.sizes):
            b[i, :] = [to_rational(Fraction(int(x), size)) for x in block_sums[i]]
        B = RationalMatrix(b)
    else:
        at = np.array((a @ T).tolist(), dtype=object)
        B = S.T @ a @ T

    labels = p.class_of()
    equitable = True
    for index in range(p.m):
        rows = at[labels == index]
        if not (rows == rows[0]).all():
            equitable = False
            break

    interlacing = None
    if compute_interlacing:
        if theta is None:
            theta = real_eigenvalues(a, tol=tol, cluster_tol=cluster_tol)
        mu = real_eigenvalues(B, sym_witness=p.sizes, tol=tol, cluster_tol=cluster_tol)
        host = theta.expanded()
        holds, tight, split = interlace(host, mu.expanded(), interlacing_tol)
        if not holds:
            logger.warning(f"Quotient eigenvalues do not interlace (m={p.m}, n={n})")
        if tight and not equitable:
            raise ConsistencyError("tight interlacing on a partition that is not equitable",
                                   check="quotient_matrix", details=f"split={split}")
        interlacing = InterlacingResult(holds, tight, split, host, mu)

    return QuotientResult(B, T, S, equitable, interlacing)


def _require_full_eccentricity(dd: DistanceData, u: int) -> None:
    if not 0 <= u < dd.n:
        raise GraphValidationError("unknown vertex", field_name="u", expected=f"0..{dd.n - 1}", actual_value=u)
    if dd.ecc(u) < dd.D:
        raise EccentricityError(u, dd.ecc(u), dd.D)


def proper_mean_matrix(dd: DistanceData, u: int, i: int) -> RationalMatrix:
    """
    S^T A_i T for the distance partition of u.

    Entry (h, j) is (1/k_h) * sum over v in Gamma_h(u) of |Gamma_i(v) & Gamma_j(u)|.

    Raises:
        EccentricityError: if ecc(u) < D
        GraphValidationError: if i is outside 0..D
    """
    _require_full_eccentricity(dd, u)
    if not 0 <= i <= dd.D:
        raise GraphValidationError("distance index out of range", field_name="i", expected=f"0..{dd.D}",
                                   actual_value=i)
    return quotient_matrix(dd.distance_matrix(i), distance_partition(dd, u), compute_interlacing=False).B


def proper_mean_matrices(dd: DistanceData, u: int) -> Tuple[RationalMatrix, ...]:
    """
    All proper mean-matrices B_0(u)..B_D(u) from a single pass over vertex pairs.

    count[h, i, j] = #{(v, w) : dist(u, v) = h, dist(v, w) = i, dist(u, w) = j}, and
    B_i(u)[h, j] = count[h, i, j] / k_h.

    Raises:
        EccentricityError: if ecc(u) < D
    """
    _require_full_eccentricity(dd, u)
    size = dd.D + 1
    du = dd.dist[u]
    keys = (du[:, None] * size + dd.dist) * size + du[None, :]
    count = np.bincount(keys.ravel(), minlength=size ** 3).reshape(size, size, size)
    k = dd.shell_sizes(u)
    out = []
    for i in range(size):
        b = np.empty((size, size), dtype=object)
        for h in range(size):
            b[h, :] = [to_rational(Fraction(int(x), k[h])) for x in count[h, i]]
        out.append(RationalMatrix(b))
    return tuple(out)
