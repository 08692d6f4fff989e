"""Exact matrix layer: frozen examples, shape errors, and algebraic laws."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frob2d.linalg import (
    Matrix,
    ShapeError,
    SingularMatrixError,
    as_rational,
    braiding,
    compose,
    identity,
    interleaver,
    inverse,
    is_permutation_matrix,
    kron,
    tensor_power,
)

scalars = st.fractions(
    min_value=-3, max_value=3, max_denominator=4
)


def small_matrix(rows, cols):
    return st.lists(scalars, min_size=rows * cols, max_size=rows * cols).map(
        lambda xs: Matrix(rows, cols, xs)
    )


def test_as_rational_accepts_ints_fractions_strings():
    assert as_rational(3) == 3
    assert as_rational(Fraction(4, 2)) == 2
    assert isinstance(as_rational(Fraction(4, 2)), int)
    assert as_rational("2/3") == Fraction(2, 3)
    assert as_rational("-7") == -7


def test_as_rational_rejects_floats_and_bools():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)


def test_compose_frozen_example():
    f = Matrix(2, 2, [1, 2, 3, 4])
    g = Matrix(2, 2, [0, 1, 1, 0])
    assert compose(f, g) == Matrix(2, 2, [2, 1, 4, 3])


def test_compose_orthogonal_pairing():
    row = Matrix(1, 2, [0, 1])
    col = Matrix(2, 1, [1, 0])
    assert compose(row, col) == Matrix(1, 1, [0])


def test_compose_identity():
    assert compose(identity(2), identity(2)) == identity(2)


def test_compose_shape_error_names_both_shapes():
    with pytest.raises(ShapeError) as err:
        compose(Matrix(2, 3, [0] * 6), Matrix(2, 2, [0] * 4))
    assert "2x3" in str(err.value) and "2x2" in str(err.value)


def test_compose_is_variadic_right_to_left():
    f = Matrix(1, 2, [1, 1])
    g = Matrix(2, 2, [0, 1, 1, 0])
    h = Matrix(2, 1, [2, 3])
    assert compose(f, g, h) == compose(f, compose(g, h))


def test_kron_frozen_examples():
    assert kron(identity(2), identity(3)) == identity(6)
    m = Matrix(2, 2, [1, 2, 3, 4])
    assert kron(Matrix(1, 1, [1]), m) == m
    assert kron(Matrix(2, 2, [0, 1, 1, 0]), Matrix(1, 1, [2])) == Matrix(
        2, 2, [0, 2, 2, 0]
    )


def test_kron_index_formula():
    f = Matrix(2, 2, [1, 2, 3, 4])
    g = Matrix(2, 2, [5, 6, 7, 8])
    fg = kron(f, g)
    for i1 in range(2):
        for i2 in range(2):
            for j1 in range(2):
                for j2 in range(2):
                    assert fg[i1 * 2 + i2, j1 * 2 + j2] == f[i1, j1] * g[i2, j2]


def test_tensor_power_zero_is_scalar_identity():
    assert tensor_power(Matrix(2, 2, [1, 2, 3, 4]), 0) == Matrix(1, 1, [1])
    assert tensor_power(identity(2), 3) == identity(8)


def test_braiding_2_2_fixes_ends_swaps_middle():
    p = braiding(2, 2)
    expect = Matrix(
        4, 4, [1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1]
    )
    assert p == expect


def test_braiding_unit_strand():
    assert braiding(1, 5) == identity(5)
    assert braiding(5, 1) == identity(5)


def test_braiding_symmetry():
    assert compose(braiding(3, 2), braiding(2, 3)) == identity(6)


def test_braiding_action_on_basis_pairs():
    a, b = 2, 3
    p = braiding(a, b)
    for i in range(a):
        for j in range(b):
            col = i * b + j
            hits = [r for r in range(a * b) if p[r, col] == 1]
            assert hits == [j * a + i]


def test_braiding_rejects_zero_dims():
    with pytest.raises(ValueError):
        braiding(0, 2)


def test_interleaver_frozen_cases():
    assert interleaver(0, 2, 3) == Matrix(1, 1, [1])
    assert interleaver(1, 2, 3) == identity(6)


def test_interleaver_2_2_2_bit_shuffle():
    p = interleaver(2, 2, 2)
    assert p.rows == p.cols == 16
    for i1 in range(2):
        for i2 in range(2):
            for j1 in range(2):
                for j2 in range(2):
                    col = ((i1 * 2 + i2) * 2 + j1) * 2 + j2
                    row = ((i1 * 2 + j1) * 2 + i2) * 2 + j2
                    assert p[row, col] == 1


def test_permutation_matrix_predicate():
    assert is_permutation_matrix(braiding(2, 3))
    assert is_permutation_matrix(interleaver(2, 2, 2))
    assert not is_permutation_matrix(Matrix(2, 2, [1, 1, 0, 0]))


def test_inverse_frozen_example():
    m = Matrix(2, 2, [1, 2, 3, 4])
    assert inverse(m) == Matrix(
        2, 2, [-2, 1, Fraction(3, 2), Fraction(-1, 2)]
    )
    assert compose(m, inverse(m)) == identity(2)


def test_inverse_singular():
    with pytest.raises(SingularMatrixError):
        inverse(Matrix(2, 2, [1, 2, 2, 4]))


def test_matrix_requires_consistent_entry_count():
    with pytest.raises(ShapeError):
        Matrix(2, 2, [1, 2, 3])


@given(small_matrix(2, 2), small_matrix(2, 2), small_matrix(2, 2))
@settings(max_examples=60, deadline=None)
def test_compose_associative(f, g, h):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(small_matrix(2, 2), small_matrix(2, 2), small_matrix(2, 2), small_matrix(2, 2))
@settings(max_examples=60, deadline=None)
def test_kron_interchange(f, g, fp, gp):
    assert compose(kron(f, g), kron(fp, gp)) == kron(compose(f, fp), compose(g, gp))


@given(small_matrix(3, 2), small_matrix(2, 2))
@settings(max_examples=60, deadline=None)
def test_braiding_naturality(f, g):
    # f: 2 -> 3, g: 2 -> 2; braid after mapping equals map after braiding
    lhs = compose(braiding(f.rows, g.rows), kron(f, g))
    rhs = compose(kron(g, f), braiding(f.cols, g.cols))
    assert lhs == rhs


@given(st.integers(min_value=1, max_value=3), st.integers(min_value=1, max_value=3))
@settings(max_examples=20, deadline=None)
def test_braiding_is_permutation(a, b):
    assert is_permutation_matrix(braiding(a, b))
    assert compose(braiding(b, a), braiding(a, b)) == identity(a * b)


@given(
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=1, max_value=2),
)
@settings(max_examples=20, deadline=None)
def test_interleaver_is_permutation(n, a, b):
    assert is_permutation_matrix(interleaver(n, a, b))
