"""Dense matrices over a tropical semiring.

Indices are 0-based here.  Text formats and the CLI show matrices row by
row, so the conventional 1-based entry (i, j) is ``A[i - 1, j - 1]``.
"""
from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from . import _kernels
from .errors import DimensionMismatch, IntegerOverflow, NotSquare
from .semiring import EPSILON, MAX_PLUS, Scalar, SemiringSpec, TropicalValue, as_value


class Matrix:
    """Immutable m x n matrix of TropicalValue.

    Storage is a pair of read-only arrays, ``values`` (int64) and ``finite``
    (bool).  Epsilon entries have ``finite`` False and a zero in
    ``values``, so two equal matrices always have identical arrays.

    >>> A = Matrix([[3, None], [0, 1]])
    >>> A.shape
    (2, 2)
    >>> A[0, 1]
    EPSILON
    """

    __slots__ = ("_vals", "_fin", "semiring")

    def __init__(self, rows: Iterable[Iterable[Scalar]], semiring: SemiringSpec = MAX_PLUS):
        rows = [[as_value(x) for x in row] for row in rows]
        if not rows or not rows[0]:
            raise ValueError("a matrix needs at least one row and one column")
        n = len(rows[0])
        for r in rows:
            if len(r) != n:
                raise ValueError(f"ragged rows: expected {n} entries, got {len(r)}")
        fin = np.array([[x.value is not None for x in r] for r in rows], dtype=np.bool_)
        vals = np.array([[0 if x.value is None else x.value for x in r] for r in rows],
                        dtype=np.int64)
        self._set(vals, fin, semiring)

    def _set(self, vals, fin, semiring):
        vals = np.where(fin, vals, 0).astype(np.int64, copy=False)
        fin = np.ascontiguousarray(fin, dtype=np.bool_)
        vals = np.ascontiguousarray(vals)
        vals.flags.writeable = False
        fin.flags.writeable = False
        self._vals = vals
        self._fin = fin
        self.semiring = semiring

    @classmethod
    def from_arrays(cls, values, finite, semiring: SemiringSpec = MAX_PLUS) -> Matrix:
        """Build from an int64 value array and a boolean finiteness mask."""
        values = np.asarray(values)
        finite = np.asarray(finite, dtype=np.bool_)
        if values.ndim != 2 or values.shape != finite.shape:
            raise ValueError(f"need two 2-D arrays of equal shape, got "
                             f"{values.shape} and {finite.shape}")
        if values.shape[0] < 1 or values.shape[1] < 1:
            raise ValueError("a matrix needs at least one row and one column")
        if values.dtype != np.int64:
            if not np.issubdtype(values.dtype, np.integer):
                raise TypeError(f"values must be integers, got dtype {values.dtype}")
            info = np.iinfo(np.int64)
            live = values[finite]
            if live.size and (int(live.max()) > info.max or int(live.min()) < info.min):
                raise IntegerOverflow("values do not fit in signed 64-bit integers")
        self = cls.__new__(cls)
        self._set(values.astype(np.int64), finite.copy(), semiring)
        return self

    @property
    def values(self) -> np.ndarray:
        return self._vals

    @property
    def finite(self) -> np.ndarray:
        return self._fin

    @property
    def shape(self) -> tuple[int, int]:
        return self._vals.shape

    @property
    def rows(self) -> int:
        return self._vals.shape[0]

    @property
    def cols(self) -> int:
        return self._vals.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx) -> TropicalValue:
        i, j = idx
        if not self._fin[i, j]:
            return EPSILON
        return TropicalValue(int(self._vals[i, j]))

    def to_lists(self) -> list[list[int | None]]:
        """Nested lists with None for epsilon."""
        return [[int(v) if f else None for v, f in zip(vr, fr)]
                for vr, fr in zip(self._vals.tolist(), self._fin.tolist())]

    def __iter__(self):
        for i in range(self.rows):
            yield [self[i, j] for j in range(self.cols)]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.semiring is other.semiring
                and self.shape == other.shape
                and np.array_equal(self._fin, other._fin)
                and np.array_equal(self._vals, other._vals))

    def __hash__(self):
        return hash((self.semiring.name, self.shape,
                     self._fin.tobytes(), self._vals.tobytes()))

    def __repr__(self):
        body = "; ".join(" ".join("E" if v is None else str(v) for v in row)
                         for row in self.to_lists())
        return f"Matrix({self.rows}x{self.cols}, [{body}])"

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return mat_add(self, other)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return mat_mul(self, other)

    def __pow__(self, k):
        return mat_pow(self, k)


def _same_semiring(A, B):
    if A.semiring is not B.semiring:
        raise ValueError(f"cannot combine {A.semiring.name} and {B.semiring.name} matrices")
    return A.semiring


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    """Entrywise tropical sum."""
    sr = _same_semiring(A, B)
    if A.shape != B.shape:
        raise DimensionMismatch(A.shape, B.shape, "matrix sum")
    av, af, bv, bf = A.values, A.finite, B.values, B.finite
    both = af & bf
    pick = np.maximum(av, bv) if sr.maximize else np.minimum(av, bv)
    vals = np.where(both, pick, np.where(af, av, bv))
    return Matrix.from_arrays(vals, af | bf, sr)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    """Tropical product; entry (i, k) reduces over A's columns j."""
    sr = _same_semiring(A, B)
    if A.cols != B.rows:
        raise DimensionMismatch((A.cols, B.cols), B.shape,
                                f"right factor of {A.rows}x{A.cols} by {B.rows}x{B.cols} product")
    vals, fin, overflow = _kernels.matmul(A.values, A.finite, B.values, B.finite,
                                          sr.maximize)
    if overflow:
        raise IntegerOverflow("matrix product leaves the signed 64-bit range")
    return Matrix.from_arrays(vals, fin, sr)


def scalar_mul(alpha: Scalar, A: Matrix) -> Matrix:
    """``alpha`` tropically times every entry of ``A``."""
    alpha = as_value(alpha)
    if alpha.is_epsilon:
        return zero_matrix(A.rows, A.cols, A.semiring)
    a = np.int64(alpha.value)
    if _kernels.add_overflows(A.values, a, A.finite):
        raise IntegerOverflow(f"scalar product by {alpha.value} leaves the signed 64-bit range")
    return Matrix.from_arrays(A.values + a, A.finite, A.semiring)


def zero_matrix(m: int, n: int, semiring: SemiringSpec = MAX_PLUS) -> Matrix:
    """The all-epsilon m x n matrix, identity for ``mat_add``."""
    if m < 1 or n < 1:
        raise ValueError(f"dimensions must be positive, got {m}x{n}")
    return Matrix.from_arrays(np.zeros((m, n), np.int64), np.zeros((m, n), np.bool_), semiring)


def identity(n: int, semiring: SemiringSpec = MAX_PLUS) -> Matrix:
    """Unit 0 on the diagonal, epsilon elsewhere."""
    if n < 1:
        raise ValueError(f"dimension must be positive, got {n}")
    return Matrix.from_arrays(np.zeros((n, n), np.int64), np.eye(n, dtype=np.bool_), semiring)


def mat_pow(A: Matrix, k: int) -> Matrix:
    """``k``-fold tropical product of square ``A``; ``k == 0`` gives the identity.

    Uses repeated squaring, so only about ``2 log2 k`` products are formed.
    """
    if not A.is_square:
        raise NotSquare(A.shape)
    k = _check_exponent(k)
    result = None
    base = A
    while k:
        if k & 1:
            result = base if result is None else mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return identity(A.rows, A.semiring) if result is None else result


def _check_exponent(k):
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise TypeError(f"exponent must be an integer, got {k!r}")
    if k < 0:
        raise ValueError(f"exponent must be non-negative, got {k}")
    return int(k)
