"""Max-plus (tropical) linear algebra: scalars, dense matrices, powers and
the recurrence x(k+1) = A x(k), plus a text format and a CLI."""
from .errors import (
    BadToken,
    DimensionMismatch,
    EmptyInput,
    IntegerOverflow,
    MaxPlusError,
    NotSquare,
    RaggedRows,
)
from .io import format_matrix, format_scalar, parse_matrix, parse_scalar, read_matrix, write_matrix
from .matrix import Matrix, identity, mat_add, mat_mul, mat_pow, scalar_mul, zero_matrix
from .recurrence import RecurrenceProblem, evolve, trajectory
from .semiring import (
    EPSILON,
    MAX_PLUS,
    MIN_PLUS,
    ONE,
    SemiringSpec,
    TropicalValue,
    epsilon,
    min_plus_oplus,
    min_plus_otimes,
    one,
    oplus,
    otimes,
)

__version__ = "0.1.0"
