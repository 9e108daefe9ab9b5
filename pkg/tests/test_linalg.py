"""Fraction-free exact linear algebra over the scalar field."""

import pytest
from hypothesis import given, strategies as st

from spin7lab.exterior.linalg import (echelon, invert, nullspace, rank, rref,
                                      solve)
from spin7lab.exterior.scalars import ONE, SQRT2, SQRT3, ZERO, FieldScalar

from _strategies import small_ints


def fs_matrix(rows):
    return [[FieldScalar.of(x) for x in r] for r in rows]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [[sum((a[i][p] * b[p][j] for p in range(k)), ZERO)
             for j in range(m)] for i in range(n)]


def mat_vec(a, x):
    return [sum((row[j] * x[j] for j in range(len(x))), ZERO) for row in a]


square_matrices = st.lists(
    st.lists(small_ints, min_size=4, max_size=4),
    min_size=4, max_size=4).map(fs_matrix)


@given(square_matrices)
def test_rank_equals_transpose_rank(m):
    mt = [list(col) for col in zip(*m)]
    assert rank(m) == rank(mt)


@given(square_matrices)
def test_rank_nullity(m):
    assert rank(m) + len(nullspace(m)) == 4


@given(square_matrices)
def test_nullspace_vectors_are_killed(m):
    for v in nullspace(m):
        assert all(not c for c in mat_vec(m, v))


@given(square_matrices)
def test_rref_is_idempotent_and_canonical(m):
    red, pivots = rref(m)
    assert len(red) == len(pivots) == rank(m)
    red2, pivots2 = rref(red)
    assert red2 == red and pivots2 == pivots
    for row, c in zip(red, pivots):
        assert row[c] == ONE
    assert pivots == sorted(pivots)


def test_echelon_keeps_row_space():
    m = fs_matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    ech, pivots = echelon(m)
    assert pivots == [0, 1]
    assert rank(ech) == rank(m) == 2


def test_irrational_pivots():
    # [[1, sqrt2], [sqrt3, 1]] has determinant 1 - sqrt6 != 0
    m = [[ONE, SQRT2], [SQRT3, ONE]]
    inv = invert(m)
    ident = [[ONE, ZERO], [ZERO, ONE]]
    assert mat_mul(m, inv) == ident
    assert mat_mul(inv, m) == ident


def test_singular_inversion_raises():
    with pytest.raises(ValueError):
        invert(fs_matrix([[1, 2], [2, 4]]))
    with pytest.raises(ValueError):
        invert(fs_matrix([[1, 2, 3], [4, 5, 6]]))


def test_solve_unique_system():
    m = fs_matrix([[2, 1], [1, -1]])
    rhs = [FieldScalar(4), FieldScalar(-1)]
    x = solve(m, rhs)
    assert mat_vec(m, x) == rhs
    assert x == [FieldScalar(1), FieldScalar(2)]


def test_solve_rejects_inconsistent_and_underdetermined():
    with pytest.raises(ValueError):
        solve(fs_matrix([[1, 1], [1, 1]]),
              [FieldScalar(0), FieldScalar(1)])
    with pytest.raises(ValueError):
        solve(fs_matrix([[1, 1]]), [FieldScalar(1)])
    with pytest.raises(ValueError):
        solve([], [])


def test_nullspace_of_empty_matrix_needs_width():
    assert len(nullspace([], ncols=5)) == 5
    with pytest.raises(ValueError):
        nullspace([])


def test_rank_of_rank_one_product():
    col = fs_matrix([[1], [2], [3], [4]])
    row = fs_matrix([[5, 6, 7, 8]])
    assert rank(mat_mul(col, row)) == 1


def test_nullspace_is_canonical_per_free_column():
    # x + 2y + 3z = 0: free columns y, z give the two canonical generators
    basis = nullspace(fs_matrix([[1, 2, 3]]))
    assert basis == [[FieldScalar(-2), ONE, ZERO],
                     [FieldScalar(-3), ZERO, ONE]]
