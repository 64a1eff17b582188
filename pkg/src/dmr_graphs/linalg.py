#!/usr/bin/env python3
"""
Exact rational linear algebra.

Scalars are ``fractions.Fraction`` (integral values are kept as plain ``int``
so integer matrices stay fast). Matrices wrap a read-only numpy object array,
so ``@``, ``+`` and elementwise products run through numpy while every entry
stays an exact Python number. Floats are rejected at construction.
"""

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from dmr_graphs.errors import ConsistencyError, DimensionMismatchError
from dmr_graphs.utils.logging import get_logger

logger = get_logger(__name__)

Rational = Union[int, Fraction]


def to_rational(value) -> Rational:
    """
    Normalize a scalar to an exact rational.

    Args:
        value: int, numpy integer, Fraction or a string such as "3/2"

    Returns:
        ``int`` when the value is integral, otherwise a ``Fraction`` in lowest terms

    Raises:
        TypeError: for floats and anything else that is not exactly representable
    """
    if isinstance(value, (bool, np.bool_)):
        return int(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return to_rational(Fraction(value.strip()))
    if isinstance(value, _RationalABC):
        return to_rational(Fraction(value.numerator, value.denominator))
    raise TypeError(f"cannot convert {type(value).__name__} {value!r} to an exact rational")


_normalize = np.frompyfunc(to_rational, 1, 1)


def _as_object_array(entries) -> np.ndarray:
    if isinstance(entries, RationalMatrix):
        return entries._data
    arr = np.array(entries, dtype=object)
    if arr.ndim != 2:
        raise DimensionMismatchError(
            "matrix entries must form a rectangular 2-d array",
            operation="construct",
            left_shape=arr.shape,
        )
    if arr.size:
        arr = _normalize(arr).astype(object)
    return arr


class RationalMatrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("_data", "_int")

    def __init__(self, entries):
        data = _as_object_array(entries)
        data.setflags(write=False)
        self._data = data
        self._int = None

    # construction

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        arr = np.zeros((n, n), dtype=object)
        for i in range(n):
            arr[i, i] = 1
        return cls(arr)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        arr = np.empty((rows, cols), dtype=object)
        arr[...] = 0
        return cls(arr)

    @classmethod
    def diag(cls, values: Sequence) -> "RationalMatrix":
        n = len(values)
        arr = np.empty((n, n), dtype=object)
        arr[...] = 0
        for i, v in enumerate(values):
            arr[i, i] = v
        return cls(arr)

    @classmethod
    def from_integers(cls, arr: np.ndarray) -> "RationalMatrix":
        """Build from an integer numpy array without per-entry checks."""
        obj = np.asarray(arr).astype(object)
        if obj.ndim != 2:
            raise DimensionMismatchError("expected a 2-d array", operation="from_integers", left_shape=obj.shape)
        out = cls.__new__(cls)
        obj = np.vectorize(int, otypes=[object])(obj) if obj.size else obj
        obj.setflags(write=False)
        out._data = obj
        out._int = None
        return out

    # shape and access

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key):
        item = self._data[key]
        if isinstance(item, np.ndarray):
            if item.ndim == 2:
                return RationalMatrix(item)
            return tuple(item.tolist())
        return item

    def row(self, i: int) -> Tuple[Rational, ...]:
        return tuple(self._data[i, :].tolist())

    def tolist(self) -> List[List[Rational]]:
        return self._data.tolist()

    def entries(self) -> Iterable[Rational]:
        return iter(self._data.flat)

    def as_integer_array(self) -> Optional[np.ndarray]:
        """Return an int64 copy when every entry is an integer, else None."""
        if self._int is None:
            self._int = False
            if all(isinstance(x, int) for x in self._data.flat):
                try:
                    self._int = np.array(self._data.tolist(), dtype=np.int64).reshape(self.shape)
                except OverflowError:
                    pass
        return None if self._int is False else self._int

    def to_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self._data.tolist()], dtype=float).reshape(self.shape)

    # arithmetic

    def _check_same_shape(self, other: "RationalMatrix", operation: str) -> None:
        if not isinstance(other, RationalMatrix):
            raise TypeError(f"{operation} expects a RationalMatrix, got {type(other).__name__}")
        if self.shape != other.shape:
            raise DimensionMismatchError(
                f"{operation} requires equal shapes",
                operation=operation,
                left_shape=self.shape,
                right_shape=other.shape,
            )

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other, "add")
        return RationalMatrix(self._data + other._data)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other, "subtract")
        return RationalMatrix(self._data - other._data)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(-self._data)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatchError(
                "matrix product requires cols(left) == rows(right)",
                operation="matmul",
                left_shape=self.shape,
                right_shape=other.shape,
            )
        left, right = self.as_integer_array(), other.as_integer_array()
        if left is not None and right is not None and max(self.cols, 1) * _max_abs(left) * _max_abs(right) < 2 ** 62:
            return RationalMatrix.from_integers(left @ right)
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return RationalMatrix.zeros(self.rows, other.cols)
        return RationalMatrix(self._data @ other._data)

    def __mul__(self, scalar) -> "RationalMatrix":
        if isinstance(scalar, RationalMatrix):
            raise TypeError("use hadamard() for the entrywise product or @ for the matrix product")
        return RationalMatrix(self._data * to_rational(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "RationalMatrix":
        q = to_rational(scalar)
        if q == 0:
            raise ZeroDivisionError("matrix divided by zero")
        return RationalMatrix(self._data * Fraction(1) / q)

    def hadamard(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other, "hadamard")
        return RationalMatrix(self._data * other._data)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self._data.T)

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    # reductions

    def sum_entries(self) -> Rational:
        return to_rational(sum(self._data.flat, 0))

    def trace(self) -> Rational:
        if not self.is_square:
            raise DimensionMismatchError("trace requires a square matrix", operation="trace", left_shape=self.shape)
        return to_rational(sum((self._data[i, i] for i in range(self.rows)), 0))

    def row_sums(self) -> Tuple[Rational, ...]:
        return tuple(to_rational(sum(r, 0)) for r in self._data.tolist())

    def col_sums(self) -> Tuple[Rational, ...]:
        return self.T.row_sums()

    # predicates

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.T

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._data.flat)

    def is_integral(self) -> bool:
        return self.as_integer_array() is not None

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self._data.flat, other._data.flat))

    __hash__ = None

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._data.tolist())
        return f"RationalMatrix([{body}])"


def _max_abs(arr: np.ndarray) -> int:
    return int(np.abs(arr).max()) if arr.size else 0


def hadamard(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    return a.hadamard(b)


class RationalPoly:
    """Univariate polynomial with exact rational coefficients (ascending degree)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Rational, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "RationalPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Rational:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other) -> "RationalPoly":
        if isinstance(other, RationalPoly):
            return other
        return RationalPoly.constant(other)

    def __add__(self, other) -> "RationalPoly":
        other = self._coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return RationalPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "RationalPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            q = to_rational(other)
            return RationalPoly(c * q for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return RationalPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "RationalPoly":
        q = to_rational(scalar)
        if q == 0:
            raise ZeroDivisionError("polynomial divided by zero")
        return RationalPoly(Fraction(c) / q for c in self.coeffs)

    def __call__(self, value):
        """Horner evaluation; exact for rationals, float for floats."""
        if isinstance(value, RationalMatrix):
            return poly_eval_matrix(self, value)
        if isinstance(value, (float, np.floating)):
            return self.evaluate_float(float(value))
        x = to_rational(value)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return to_rational(acc)

    def evaluate_float(self, value: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * value + float(c)
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        try:
            return self == RationalPoly.constant(other)
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RationalPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if power == 0:
                body = str(mag)
            else:
                var = "x" if power == 1 else f"x^{power}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _require_square(m: RationalMatrix, operation: str) -> None:
    if not m.is_square:
        raise DimensionMismatchError(f"{operation} requires a square matrix", operation=operation, left_shape=m.shape)


def matrix_inner(m: RationalMatrix, other: RationalMatrix, size: Optional[int] = None) -> Rational:
    """
    Normalized trace inner product (1/n) tr(M N).

    For symmetric arguments the value is recomputed as (1/n) sum(M o N) and
    the two routes must agree exactly.

    Raises:
        DimensionMismatchError: if the operands are not square of equal size
        ConsistencyError: if the two routes disagree
    """
    _require_square(m, "matrix_inner")
    _require_square(other, "matrix_inner")
    if m.shape != other.shape:
        raise DimensionMismatchError(
            "matrix_inner requires equal dimensions",
            operation="matrix_inner",
            left_shape=m.shape,
            right_shape=other.shape,
        )
    n = size if size is not None else m.rows
    value = to_rational(Fraction((m @ other).trace(), n))
    if m.is_symmetric() and other.is_symmetric():
        via_hadamard = to_rational(Fraction(m.hadamard(other).sum_entries(), n))
        if via_hadamard != value:
            raise ConsistencyError(
                "trace and Hadamard routes of the inner product disagree",
                check="matrix_inner",
                details=f"{value} != {via_hadamard}",
            )
    return value


def poly_eval_matrix(p: RationalPoly, m: RationalMatrix) -> RationalMatrix:
    """
    Exact Horner evaluation p(M).

    The coefficients are scaled to integers first, so integer matrices stay on
    the int64 product path until the final division.
    """
    _require_square(m, "poly_eval_matrix")
    scale = math.lcm(*(Fraction(c).denominator for c in p.coeffs)) if p.coeffs else 1
    ident = RationalMatrix.identity(m.rows)
    result = RationalMatrix.zeros(m.rows, m.cols)
    for c in reversed(p.coeffs):
        result = result @ m + ident * (c * scale)
    return result if scale == 1 else result / scale


def char_poly(m: RationalMatrix) -> RationalPoly:
    """
    Characteristic polynomial det(xI - M) by Faddeev-LeVerrier.

    Each step divides by the step index only, so intermediate values stay exact.
    """
    _require_square(m, "char_poly")
    n = m.rows
    coeffs: List[Rational] = [0] * (n + 1)
    coeffs[n] = 1
    ident = RationalMatrix.identity(n)
    am = RationalMatrix.zeros(n, n)
    for k in range(1, n + 1):
        mk = am + ident * coeffs[n - k + 1]
        am = m @ mk
        coeffs[n - k] = to_rational(-Fraction(am.trace(), k))
    return RationalPoly(coeffs)


def _reduce(rows: List[List[Rational]], ncols: int) -> Tuple[List[List[Rational]], List[int]]:
    """Reduced row echelon form over the rationals; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [to_rational(x * inv) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [to_rational(x - f * y) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def flatten(m: RationalMatrix) -> Tuple[Rational, ...]:
    return tuple(m.entries())


class EchelonBasis:
    """Incrementally maintained reduced echelon basis of a vector span."""

    def __init__(self):
        self._rows: List[Tuple[int, List[Rational]]] = []

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Sequence[Rational]) -> List[Rational]:
        vec = list(vector)
        for pivot, row in self._rows:
            f = vec[pivot]
            if f != 0:
                vec = [to_rational(x - f * y) for x, y in zip(vec, row)]
        return vec

    def add(self, vector: Sequence[Rational]) -> bool:
        """Add a vector; returns False when it already lies in the span."""
        vec = self.reduce(vector)
        pivot = next((i for i, x in enumerate(vec) if x != 0), None)
        if pivot is None:
            return False
        inv = Fraction(1) / vec[pivot]
        vec = [to_rational(x * inv) for x in vec]
        reduced = []
        for p, row in self._rows:
            f = row[pivot]
            if f != 0:
                row = [to_rational(x - f * y) for x, y in zip(row, vec)]
            reduced.append((p, row))
        reduced.append((pivot, vec))
        self._rows = reduced
        return True


def rank(vectors: Sequence[Sequence[Rational]]) -> int:
    """Rank of a family of equal-length vectors."""
    basis = EchelonBasis()
    for v in vectors:
        basis.add(v)
    return len(basis)


def solve_combination(
    vectors: Sequence[Sequence[Rational]],
    target: Sequence[Rational],
) -> Optional[List[Rational]]:
    """
    Find coefficients c with sum(c[i] * vectors[i]) == target, exactly.

    Returns None when the target is outside the span. With dependent vectors
    the free coefficients are set to zero.
    """
    k = len(vectors)
    if k == 0:
        return [] if all(t == 0 for t in target) else None
    length = len(target)
    if any(len(v) != length for v in vectors):
        raise DimensionMismatchError("vectors must share the target length", operation="solve_combination")
    # drop coordinates where every vector and the target vanish
    support = [r for r in range(length) if target[r] != 0 or any(v[r] != 0 for v in vectors)]
    system = [[vectors[i][r] for i in range(k)] + [target[r]] for r in support]
    reduced, pivots = _reduce(system, k + 1)
    if k in pivots:
        return None
    solution: List[Rational] = [0] * k
    for row, col in zip(reduced, pivots):
        solution[col] = row[k]
    return solution


def minimal_polynomial_degree(m: RationalMatrix) -> int:
    """Degree of the minimal polynomial: the number of independent powers I, M, M^2, ..."""
    _require_square(m, "minimal_polynomial_degree")
    basis = EchelonBasis()
    current = RationalMatrix.identity(m.rows)
    while basis.add(flatten(current)):
        current = current @ m
    return len(basis)
