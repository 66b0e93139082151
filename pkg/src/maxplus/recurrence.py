"""The autonomous linear recurrence x(k+1) = A x(k) over a tropical semiring."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, NotSquare
from .matrix import Matrix, _check_exponent, mat_mul, mat_pow


@dataclass(frozen=True)
class RecurrenceProblem:
    """Square ``A``, column vector ``x0`` and horizon ``k``.

    In a timed event graph ``x0`` holds the first firing epochs and ``A``
    the holding times, so ``evolve`` returns the epochs of the k-th firing.
    """

    A: Matrix
    x0: Matrix
    horizon: int

    def __post_init__(self):
        if not self.A.is_square:
            raise NotSquare(self.A.shape)
        if self.x0.shape != (self.A.rows, 1):
            raise DimensionMismatch((self.A.rows, 1), self.x0.shape, "initial state")
        if self.A.semiring is not self.x0.semiring:
            raise ValueError("A and x0 must share a semiring")
        object.__setattr__(self, "horizon", _check_exponent(self.horizon))


def evolve(p: RecurrenceProblem) -> Matrix:
    """Terminal state ``x(k)``, computed as ``A^k x0``."""
    if p.horizon == 0:
        return p.x0
    return mat_mul(mat_pow(p.A, p.horizon), p.x0)


def trajectory(p: RecurrenceProblem) -> list[Matrix]:
    """All states ``[x(0), ..., x(k)]`` by repeated matrix-vector products."""
    states = [p.x0]
    for _ in range(p.horizon):
        states.append(mat_mul(p.A, states[-1]))
    return states
