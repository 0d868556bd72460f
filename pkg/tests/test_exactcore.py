from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfaut.exactcore import (
    EchelonBasis,
    SparseMatrix,
    kernel_basis,
    rank,
    reduce_modulo,
    row_echelon,
    solve,
)
from oracles import dense_rank

small_ints = st.integers(min_value=-4, max_value=4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_identity_rank():
    assert rank(SparseMatrix.identity(4)) == 4


def test_rank_small_examples():
    assert rank(SparseMatrix.from_dense([[1, 2], [2, 4]])) == 1
    assert rank(SparseMatrix.from_dense([[0, 0], [0, 0]])) == 0
    assert rank(SparseMatrix.from_dense([[1, 0, 1], [0, 1, 1], [1, 1, 2]])) == 2


def test_kernel_of_rank_one():
    m = SparseMatrix.from_dense([[1, 1, 1]])
    ker = kernel_basis(m)
    assert len(ker) == 2
    for v in ker:
        assert not m.matvec(v)


def test_row_echelon_is_reduced():
    m = SparseMatrix.from_dense([[2, 4, 6], [1, 3, 5]])
    ech, pivots, r = row_echelon(m)
    assert r == 2 and pivots == [0, 1]
    assert ech.to_dense()[0] == [1, 0, -1]
    assert ech.to_dense()[1] == [0, 1, 2]


def test_solve_and_inconsistent():
    m = SparseMatrix.from_dense([[1, 1], [1, -1]])
    x = solve(m, {0: 3, 1: 1})
    assert x == {0: 2, 1: 1}
    with pytest.raises(ValueError):
        solve(SparseMatrix.from_dense([[1, 1], [2, 2]]), {0: 1, 1: 3})


def test_reduce_modulo_canonical():
    span = [[1, 1, 0]]
    a = reduce_modulo(span, [1, 0, 0])
    b = reduce_modulo(span, [0, -1, 0])
    assert a == b == [0, Fraction(-1), 0]
    with pytest.raises(ValueError):
        reduce_modulo([[1, 2]], [1, 2, 3])


def test_echelon_rejects_out_of_range():
    e = EchelonBasis(2)
    with pytest.raises(ValueError):
        e.add({5: 1})


@given(matrices())
def test_rank_matches_dense_oracle(rows):
    assert rank(SparseMatrix.from_dense(rows)) == dense_rank(rows)


@given(matrices())
def test_rank_nullity(rows):
    m = SparseMatrix.from_dense(rows)
    ker = kernel_basis(m)
    assert len(ker) + rank(m) == m.cols
    for v in ker:
        assert not m.matvec(v)


@given(matrices())
def test_transpose_rank(rows):
    m = SparseMatrix.from_dense(rows)
    assert rank(m) == rank(m.transpose())


@given(matrices(), st.lists(small_ints, min_size=5, max_size=5))
def test_reduce_modulo_is_idempotent_and_invariant(rows, coeffs):
    n = len(rows[0])
    v = [c for c in coeffs[:n]] + [0] * (n - len(coeffs[:n]))
    red = reduce_modulo(rows, v)
    assert reduce_modulo(rows, red) == red
    shifted = [a + 3 * b for a, b in zip(v, rows[0])]
    assert reduce_modulo(rows, shifted) == red
