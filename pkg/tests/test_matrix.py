import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from maxplus import (
    EPSILON,
    MAX_PLUS,
    MIN_PLUS,
    DimensionMismatch,
    IntegerOverflow,
    Matrix,
    NotSquare,
    TropicalValue,
    identity,
    mat_add,
    mat_mul,
    mat_pow,
    scalar_mul,
    zero_matrix,
)

from golden import (
    E, EX1_A, EX1_B, EX1_SUM, EX2_A, EX2_B, EX2_PROD, EX3_A, EX3_ALPHA, EX3_OUT,
    EX4_A, EX4_POW9, random_matrix,
)
from oracle import brute_add, brute_mul, brute_pow

entries = st.one_of(st.none(), st.integers(-50, 50))


@st.composite
def matrices(draw, m=None, n=None):
    m = m or draw(st.integers(1, 5))
    n = n or draw(st.integers(1, 5))
    return Matrix(draw(st.lists(st.lists(entries, min_size=n, max_size=n),
                                min_size=m, max_size=m)))


@st.composite
def square_triples(draw):
    n = draw(st.integers(1, 5))
    return tuple(draw(matrices(n, n)) for _ in range(3))


def test_construction_and_access():
    A = Matrix(EX1_A)
    assert A.shape == (3, 4) and A.rows == 3 and A.cols == 4
    assert A[0, 1] is EPSILON
    assert A[2, 3] == TropicalValue(1)
    assert A.to_lists() == EX1_A
    assert [list(r) for r in A][0][0] == TropicalValue(3)


def test_matrix_is_read_only():
    A = Matrix([[1, 2]])
    with pytest.raises(ValueError):
        A.values[0, 0] = 5


def test_constructor_rejects_bad_shapes():
    with pytest.raises(ValueError):
        Matrix([])
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        Matrix.from_arrays(np.zeros((0, 2), np.int64), np.zeros((0, 2), bool))


def test_equality_ignores_epsilon_payload():
    a = Matrix.from_arrays(np.array([[5, 7]]), np.array([[False, True]]))
    b = Matrix.from_arrays(np.array([[-9, 7]]), np.array([[False, True]]))
    assert a == b and hash(a) == hash(b)
    assert Matrix([[1]], MIN_PLUS) != Matrix([[1]], MAX_PLUS)


def test_add_example(backend):
    assert mat_add(Matrix(EX1_A), Matrix(EX1_B)).to_lists() == EX1_SUM
    assert (Matrix(EX1_A) + Matrix(EX1_B)).to_lists() == EX1_SUM


def test_add_identity_and_idempotency():
    A = Matrix(EX1_A)
    assert mat_add(A, zero_matrix(3, 4)) == A
    assert mat_add(A, A) == A


def test_add_shape_mismatch():
    with pytest.raises(DimensionMismatch) as err:
        mat_add(Matrix(EX1_A), Matrix(EX2_B))
    assert err.value.expected == (3, 4) and err.value.got == (4, 3)


def test_mul_example(backend):
    C = mat_mul(Matrix(EX2_A), Matrix(EX2_B))
    assert C.shape == (3, 3)
    assert C.to_lists() == EX2_PROD
    assert (Matrix(EX2_A) @ Matrix(EX2_B)) == C


def test_mul_small_case_against_oracle(backend):
    A = [[1, E], [0, 2]]
    B = [[0, 3], [1, E]]
    expected = brute_mul(A, B)
    assert expected == [[1, 4], [3, 3]]
    assert mat_mul(Matrix(A), Matrix(B)).to_lists() == expected


def test_mul_identity():
    A = Matrix(EX2_A)
    assert mat_mul(A, identity(4)) == A
    assert mat_mul(identity(3), A) == A


def test_epsilon_row_gives_epsilon(backend):
    A = Matrix([[E, E], [1, 2]])
    B = Matrix([[3, 4], [5, 6]])
    assert mat_mul(A, B).to_lists() == [[E, E], [7, 8]]


def test_mul_shape_mismatch_names_both_shapes():
    with pytest.raises(DimensionMismatch) as err:
        mat_mul(Matrix(EX2_A), Matrix(EX1_A))
    assert "3x4" in str(err.value)


def test_mul_overflow(backend):
    A = Matrix([[2**62, 0], [0, 0]])
    with pytest.raises(IntegerOverflow):
        mat_mul(A, A)


def test_mixed_semirings_refused():
    with pytest.raises(ValueError):
        mat_add(Matrix([[1]]), Matrix([[1]], MIN_PLUS))


def test_scalar_example():
    assert scalar_mul(EX3_ALPHA, Matrix(EX3_A)).to_lists() == EX3_OUT
    assert scalar_mul(TropicalValue(EX3_ALPHA), Matrix(EX3_A)).to_lists() == EX3_OUT


def test_scalar_unit_and_epsilon():
    A = Matrix(EX3_A)
    assert scalar_mul(0, A) == A
    assert scalar_mul(EPSILON, A) == zero_matrix(3, 5)


def test_scalar_overflow():
    with pytest.raises(IntegerOverflow):
        scalar_mul(1, Matrix([[2**63 - 1]]))
    # epsilon entries are never added to
    assert scalar_mul(1, Matrix([[E, 3]])).to_lists() == [[E, 4]]


def test_zero_and_identity():
    assert zero_matrix(2, 2).to_lists() == [[E, E], [E, E]]
    assert zero_matrix(1, 3).to_lists() == [[E, E, E]]
    assert identity(2).to_lists() == [[0, E], [E, 0]]
    assert mat_mul(identity(3), identity(3)) == identity(3)
    with pytest.raises(ValueError):
        identity(0)
    with pytest.raises(ValueError):
        zero_matrix(2, 0)


def test_pow_example(backend):
    assert mat_pow(Matrix(EX4_A), 9).to_lists() == EX4_POW9
    assert brute_pow(EX4_A, 9) == EX4_POW9


def test_pow_small_cases():
    A = Matrix([[1, E], [0, 2]])
    assert mat_pow(A, 0) == identity(2)
    assert mat_pow(A, 1) == A
    expected = brute_mul(A.to_lists(), A.to_lists())
    assert expected == [[2, E], [2, 4]]
    assert mat_pow(A, 2).to_lists() == expected
    assert (A ** 2).to_lists() == expected


def test_pow_errors():
    with pytest.raises(NotSquare):
        mat_pow(Matrix(EX1_A), 2)
    with pytest.raises(ValueError):
        mat_pow(identity(2), -1)
    with pytest.raises(TypeError):
        mat_pow(identity(2), 2.0)


def test_min_plus_matrices_against_oracle(backend):
    rng = np.random.default_rng(11)
    for _ in range(50):
        A = random_matrix(rng, 3, 4, semiring=MIN_PLUS)
        B = random_matrix(rng, 4, 2, semiring=MIN_PLUS)
        assert mat_mul(A, B).to_lists() == brute_mul(A.to_lists(), B.to_lists(), pick=min)
        C = random_matrix(rng, 3, 4, semiring=MIN_PLUS)
        assert mat_add(A, C).to_lists() == brute_add(A.to_lists(), C.to_lists(), pick=min)


def test_shortest_paths_by_min_plus_power():
    # 0 -> 1 -> 2 costs 3, direct edge 0 -> 2 costs 10
    W = Matrix([[0, 1, 10], [E, 0, 2], [E, E, 0]], MIN_PLUS)
    assert mat_pow(W, 2).to_lists() == [[0, 1, 3], [E, 0, 2], [E, E, 0]]


@settings(max_examples=200, deadline=None,
          suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(m=st.data())
def test_mul_matches_oracle(backend, m):
    A = m.draw(matrices())
    B = m.draw(matrices(A.cols))
    assert mat_mul(A, B).to_lists() == brute_mul(A.to_lists(), B.to_lists())


@settings(max_examples=200, deadline=None)
@given(square_triples())
def test_matrix_semiring_axioms(triple):
    A, B, C = triple
    n = A.rows
    O, I = zero_matrix(n, n), identity(n)
    assert (A + B) + C == A + (B + C)
    assert A + B == B + A
    assert A + A == A
    assert A + O == A
    assert (A @ B) @ C == A @ (B @ C)
    assert A @ I == A == I @ A
    assert A @ O == O == O @ A
    assert A @ (B + C) == A @ B + A @ C
    assert (A + B) @ C == A @ C + B @ C


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_mul_associative_rectangular(data):
    A = data.draw(matrices())
    B = data.draw(matrices(A.cols))
    C = data.draw(matrices(B.cols))
    assert (A @ B) @ C == A @ (B @ C)


@settings(max_examples=100, deadline=None)
@given(st.data(), st.one_of(st.none(), st.integers(-50, 50)))
def test_scalar_equals_diagonal_action(data, alpha):
    A = data.draw(matrices())
    D = scalar_mul(alpha, identity(A.rows))
    assert scalar_mul(alpha, A) == mat_mul(D, A)


@settings(max_examples=50, deadline=None)
@given(matrices(4, 4), st.integers(0, 12))
def test_pow_matches_naive(A, k):
    naive = identity(4)
    for _ in range(k):
        naive = mat_mul(naive, A)
    assert mat_pow(A, k) == naive
