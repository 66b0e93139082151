"""Tropical scalars and the idempotent semirings built on them.

A :class:`TropicalValue` is either epsilon (the semiring zero) or an exact
signed 64-bit integer.  Epsilon is a distinct state, never an integer
sentinel, so unguarded arithmetic on it cannot happen.

Two semirings share this carrier:

* ``MAX_PLUS``: plus is ``max``, times is ``+``, epsilon behaves as -inf.
* ``MIN_PLUS``: plus is ``min``, times is ``+``, epsilon behaves as +inf.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .errors import IntegerOverflow

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


@dataclass(frozen=True, slots=True)
class TropicalValue:
    """An element of the carrier: epsilon when ``value`` is None."""

    value: int | None = None

    def __post_init__(self):
        v = self.value
        if v is None:
            return
        if isinstance(v, bool):
            raise TypeError("finite part must be an integer, not a bool")
        if not isinstance(v, int):
            # numpy integers are accepted and normalised to int
            try:
                iv = int(v.__index__())
            except AttributeError:
                raise TypeError(f"finite part must be an integer, got {v!r}") from None
            object.__setattr__(self, "value", iv)
            v = iv
        if not INT64_MIN <= v <= INT64_MAX:
            raise IntegerOverflow(f"{v} does not fit in a signed 64-bit integer")

    @classmethod
    def finite(cls, value: int) -> TropicalValue:
        return cls(value)

    @classmethod
    def epsilon(cls) -> TropicalValue:
        return EPSILON

    @property
    def is_epsilon(self) -> bool:
        return self.value is None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    # Max-plus order: epsilon sorts below every finite value.
    def __lt__(self, other):
        if not isinstance(other, TropicalValue):
            return NotImplemented
        if other.value is None:
            return False
        return self.value is None or self.value < other.value

    def __le__(self, other):
        if not isinstance(other, TropicalValue):
            return NotImplemented
        return self == other or self < other

    def __gt__(self, other):
        if not isinstance(other, TropicalValue):
            return NotImplemented
        return other < self

    def __ge__(self, other):
        if not isinstance(other, TropicalValue):
            return NotImplemented
        return other <= self

    def __str__(self):
        return "E" if self.value is None else str(self.value)

    def __repr__(self):
        return "EPSILON" if self.value is None else f"Finite({self.value})"


EPSILON = TropicalValue()
ONE = TropicalValue(0)

Scalar = Union[TropicalValue, int, None]


def epsilon() -> TropicalValue:
    """The semiring zero, printed ``E``."""
    return EPSILON


def one() -> TropicalValue:
    """The max-plus unit ``e``, i.e. the integer 0."""
    return ONE


def as_value(x: Scalar) -> TropicalValue:
    """Coerce ``x`` to a TropicalValue; None means epsilon."""
    if isinstance(x, TropicalValue):
        return x
    if x is None:
        return EPSILON
    return TropicalValue(x)


def checked_add(a: int, b: int) -> int:
    s = a + b
    if not INT64_MIN <= s <= INT64_MAX:
        raise IntegerOverflow(f"{a} + {b} overflows a signed 64-bit integer")
    return s


def oplus(a: Scalar, b: Scalar) -> TropicalValue:
    """Max-plus addition: the larger operand, epsilon being smallest."""
    a, b = as_value(a), as_value(b)
    if a.value is None:
        return b
    if b.value is None:
        return a
    return a if a.value >= b.value else b


def otimes(a: Scalar, b: Scalar) -> TropicalValue:
    """Tropical multiplication: integer sum, absorbed by epsilon.

    Raises IntegerOverflow instead of wrapping when the sum leaves int64.
    """
    a, b = as_value(a), as_value(b)
    if a.value is None or b.value is None:
        return EPSILON
    return TropicalValue(checked_add(a.value, b.value))


def min_plus_oplus(a: Scalar, b: Scalar) -> TropicalValue:
    a, b = as_value(a), as_value(b)
    if a.value is None:
        return b
    if b.value is None:
        return a
    return a if a.value <= b.value else b


min_plus_otimes = otimes


@dataclass(frozen=True)
class SemiringSpec:
    """An idempotent semiring over TropicalValue.

    ``maximize`` records which way plus selects, so that matrix kernels
    can dispatch without inspecting ``plus`` itself.
    """

    name: str
    zero: TropicalValue
    one: TropicalValue
    plus: Callable[[Scalar, Scalar], TropicalValue]
    times: Callable[[Scalar, Scalar], TropicalValue]
    maximize: bool

    def sum(self, values) -> TropicalValue:
        acc = self.zero
        for v in values:
            acc = self.plus(acc, v)
        return acc

    def product(self, values) -> TropicalValue:
        acc = self.one
        for v in values:
            acc = self.times(acc, v)
        return acc

    def __repr__(self):
        return f"<SemiringSpec {self.name}>"


MAX_PLUS = SemiringSpec("max-plus", EPSILON, ONE, oplus, otimes, maximize=True)
MIN_PLUS = SemiringSpec("min-plus", EPSILON, ONE, min_plus_oplus, min_plus_otimes, maximize=False)
