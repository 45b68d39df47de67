from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidinv.linalg import (
    SparseMatrix, format_scalar, in_span, nullspace_basis, parse_scalar, rank, row_space_basis,
)


def naive_rref(rows, cols):
    """Textbook Gauss-Jordan over Fractions, left to right."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(cols):
        sel = next((i for i in range(r, len(m)) if m[i][c]), None)
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def apply_dense(rows, vec):
    return [sum(Fraction(a) * vec.get(j, 0) for j, a in enumerate(row)) for row in rows]


matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=0, max_size=6)
    .map(lambda rows: (rows, c)))


def test_scalar_roundtrip():
    assert parse_scalar("3") == 3
    assert parse_scalar("-3/2") == Fraction(-3, 2)
    assert parse_scalar("−3/2") == Fraction(-3, 2)
    assert format_scalar(Fraction(-3, 2)) == "-3/2"
    assert format_scalar(Fraction(4, 2)) == "2"
    with pytest.raises(ValueError):
        parse_scalar("abc")


def test_spec_nullspace_examples():
    assert nullspace_basis(SparseMatrix.from_dense([[0]])) == [{0: 1}]
    assert nullspace_basis(SparseMatrix.from_dense([[1, -1]])) == [{0: 1, 1: 1}]
    (v,) = nullspace_basis(SparseMatrix.from_dense([[1, 1, 0], [0, 1, 1]]))
    # proportional to (1, -1, 1)
    assert v == {0: 1, 1: -1, 2: 1}


def test_spec_rank_examples():
    assert rank(SparseMatrix(3, 4)) == 0
    for k in range(1, 6):
        assert rank(SparseMatrix(k, k, {(i, i): 1 for i in range(k)})) == k
    assert rank(SparseMatrix.from_dense([[1, 2], [2, 4]])) == 1


def test_matrix_validation():
    with pytest.raises(IndexError):
        SparseMatrix(2, 2, {(2, 0): 1})
    with pytest.raises(ValueError):
        SparseMatrix.from_dense([[1, 2], [3]])
    m = SparseMatrix(2, 2, {(0, 0): 0, (1, 1): Fraction(1, 2)})
    assert m.nnz() == 1
    assert m[1, 1] == Fraction(1, 2)
    assert m.apply({1: 4}) == {1: 2}


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_matches_textbook(data):
    rows, cols = data
    ref, _ = naive_rref(rows, cols)
    m = SparseMatrix.from_rows([dict(enumerate(r)) for r in rows], cols)
    assert rank(m, "sparse") == rank(m, "dense") == len(ref)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_nullspace_is_kernel_of_right_size(data):
    rows, cols = data
    m = SparseMatrix.from_rows([dict(enumerate(r)) for r in rows], cols)
    basis = nullspace_basis(m)
    assert len(basis) == cols - rank(m)
    for v in basis:
        assert all(x == 0 for x in apply_dense(rows, v))
    # reduced echelon: the leading coordinate is 1 and absent elsewhere
    leads = [min(v) for v in basis]
    assert leads == sorted(set(leads))
    for v, f in zip(basis, leads):
        assert v[f] == 1
        assert all(f not in w for w in basis if w is not v)
    assert basis == nullspace_basis(m, "dense")


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_row_space_basis_is_unique_rref(data):
    rows, cols = data
    m = SparseMatrix.from_rows([dict(enumerate(r)) for r in rows], cols)
    # our pivots are the largest columns, so compare against the textbook on reversed columns
    ref, piv = naive_rref([list(reversed(r)) for r in rows], cols)
    expected = {cols - 1 - p: {cols - 1 - j: x for j, x in enumerate(r) if x} for r, p in zip(ref, piv)}
    assert row_space_basis(m, "sparse") == expected
    assert row_space_basis(m, "dense") == expected


def test_in_span():
    assert in_span([{0: 1, 1: 1}, {1: 1}], {0: 2, 1: 5})
    assert not in_span([{0: 1, 1: 1}], {0: 1})
    assert in_span([], {})
