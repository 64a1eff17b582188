#!/usr/bin/env python3
"""
Floating eigenvalue extraction for exact matrices.

Only symmetric problems are solved. A non-symmetric matrix must come with a
positive diagonal witness w such that diag(w) M is symmetric; the solver then
works on diag(w)^(1/2) M diag(w)^(-1/2), which has the same spectrum.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from dmr_graphs.errors import DimensionMismatchError, SymmetrizationError
from dmr_graphs.linalg import RationalMatrix, to_rational
from dmr_graphs.utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_TOL = 1e-12
DEFAULT_CLUSTER_TOL = 1e-6


@dataclass(frozen=True)
class SpectralData:
    """Distinct eigenvalues (descending) with multiplicities."""

    eigenvalues: Tuple[float, ...]
    multiplicities: Tuple[int, ...]
    cluster_tol: float = DEFAULT_CLUSTER_TOL
    tol: float = DEFAULT_TOL
    residual: float = 0.0

    def __post_init__(self):
        if len(self.eigenvalues) != len(self.multiplicities):
            raise ValueError("eigenvalues and multiplicities differ in length")
        if any(m <= 0 for m in self.multiplicities):
            raise ValueError("multiplicities must be positive")
        if any(a <= b for a, b in zip(self.eigenvalues, self.eigenvalues[1:])):
            raise ValueError("eigenvalues must be strictly decreasing")

    @property
    def dimension(self) -> int:
        return sum(self.multiplicities)

    @property
    def distinct(self) -> int:
        return len(self.eigenvalues)

    def expanded(self) -> Tuple[float, ...]:
        """Eigenvalues repeated by multiplicity, descending."""
        return tuple(v for v, m in zip(self.eigenvalues, self.multiplicities) for _ in range(m))

    def multiplicity_of(self, value: float, tol: Optional[float] = None) -> int:
        tol = self.cluster_tol if tol is None else tol
        for v, m in zip(self.eigenvalues, self.multiplicities):
            if abs(v - value) <= tol:
                return m
        return 0

    def as_pairs(self) -> List[Tuple[float, int]]:
        return list(zip(self.eigenvalues, self.multiplicities))


def cluster_eigenvalues(values: Sequence[float], cluster_tol: float) -> Tuple[Tuple[float, ...], Tuple[int, ...]]:
    """
    Merge roots closer than cluster_tol (single linkage on the sorted list).

    Each cluster is represented by its mean.
    """
    ordered = sorted((float(v) for v in values), reverse=True)
    groups: List[List[float]] = []
    for v in ordered:
        if groups and groups[-1][-1] - v < cluster_tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    return tuple(float(np.mean(g)) for g in groups), tuple(len(g) for g in groups)


def _symmetrized(m: RationalMatrix, sym_witness: Optional[Sequence]) -> np.ndarray:
    if sym_witness is None:
        if not m.is_symmetric():
            raise SymmetrizationError(
                "matrix is not symmetric and no symmetrizing witness was supplied",
                context={"shape": m.shape},
            )
        return m.to_float()

    weights = [to_rational(w) for w in sym_witness]
    if len(weights) != m.rows:
        raise DimensionMismatchError(
            "symmetrizing witness length must match the matrix",
            operation="real_eigenvalues",
            left_shape=m.shape,
            right_shape=(len(weights),),
        )
    if any(w <= 0 for w in weights):
        raise SymmetrizationError("symmetrizing witness must be positive", context={"witness": weights})
    # diag(w) M symmetric, checked exactly
    for i in range(m.rows):
        for j in range(i + 1, m.cols):
            if weights[i] * m[i, j] != weights[j] * m[j, i]:
                raise SymmetrizationError(
                    "witness does not symmetrize the matrix",
                    context={"row": i, "col": j},
                )
    root = np.sqrt(np.array([float(w) for w in weights]))
    sym = root[:, None] * m.to_float() / root[None, :]
    return (sym + sym.T) / 2


def real_eigenvalues(
    m: RationalMatrix,
    sym_witness: Optional[Sequence] = None,
    tol: float = DEFAULT_TOL,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
) -> SpectralData:
    """
    Eigenvalues of a symmetric (or symmetrizable) exact matrix.

    Args:
        m: Square matrix
        sym_witness: Positive diagonal w with diag(w) M symmetric, for non-symmetric M
        tol: Residual tolerance; a larger residual is logged, not raised
        cluster_tol: Roots closer than this are merged

    Returns:
        SpectralData with descending distinct eigenvalues

    Raises:
        DimensionMismatchError: if m is not square
        SymmetrizationError: if m is not symmetric and the witness is missing or invalid
    """
    if not m.is_square:
        raise DimensionMismatchError("eigenvalues require a square matrix", operation="real_eigenvalues",
                                     left_shape=m.shape)
    sym = _symmetrized(m, sym_witness)
    if sym.size == 0:
        return SpectralData((), (), cluster_tol, tol, 0.0)

    values, vectors = np.linalg.eigh(sym)
    residual = float(np.abs(sym @ vectors - vectors * values[None, :]).max())
    if residual > tol * max(1.0, float(np.abs(sym).max())):
        logger.warning(f"Eigensolver residual {residual:.3e} exceeds tolerance {tol:.1e}")

    eigenvalues, multiplicities = cluster_eigenvalues(values, cluster_tol)
    logger.debug(f"Spectrum of {m.rows}x{m.cols} matrix: {len(eigenvalues)} distinct eigenvalues")
    return SpectralData(eigenvalues, multiplicities, cluster_tol, tol, residual)
