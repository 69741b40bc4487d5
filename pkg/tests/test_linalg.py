import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ccode3d import linalg


@st.composite
def matrices(draw):
    p = draw(st.sampled_from([2, 3, 5, 7]))
    rows = draw(st.integers(1, 5))
    cols = draw(st.integers(1, 5))
    data = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols),
                         min_size=rows, max_size=rows))
    return np.array(data, dtype=np.int64), p


def test_rref_identity():
    eye = np.eye(4, dtype=np.int64)
    reduced, rk, pivots = linalg.rref(eye, 5)
    assert np.array_equal(reduced, eye) and rk == 4 and pivots == (0, 1, 2, 3)


def test_rref_proportional_rows():
    m = np.array([[1, 1], [2, 2]])
    _, rk, _ = linalg.rref(m, 5)
    assert rk == 1


def test_rank_by_exhaustive_span():
    # oracle: count distinct vectors in the row span over F_2
    m = np.array([[0, 1], [1, 0], [1, 1]])
    span = set()
    for coeffs in itertools.product(range(2), repeat=3):
        v = tuple((np.array(coeffs) @ m) % 2)
        span.add(v)
    assert len(span) == 2 ** linalg.rank(m, 2) == 4


@given(matrices())
def test_rref_idempotent(mp):
    m, p = mp
    reduced, rk, piv = linalg.rref(m, p)
    again, rk2, piv2 = linalg.rref(reduced, p)
    assert np.array_equal(reduced, again) and rk == rk2 and piv == piv2


@given(matrices())
def test_rank_equals_transpose_rank(mp):
    m, p = mp
    assert linalg.rank(m, p) == linalg.rank(m.T, p)


def test_row_space_contains_examples():
    m = np.array([[1, 0, 0]])
    assert linalg.row_space_contains(m, [0, 0, 0], 5)
    assert not linalg.row_space_contains(m, [0, 1, 0], 5)
    eye = np.eye(3, dtype=np.int64)
    assert linalg.row_space_contains(eye, [4, 2, 1], 5)
    with pytest.raises(ValueError):
        linalg.row_space_contains(m, [1, 0], 5)


@given(matrices())
def test_row_space_contains_actual_combinations(mp):
    m, p = mp
    combo = (np.arange(1, m.shape[0] + 1) @ m) % p
    assert linalg.row_space_contains(m, combo, p)


def test_null_space_examples():
    assert linalg.null_space(np.eye(3, dtype=np.int64), 5).shape == (0, 3)
    basis = linalg.null_space(np.array([[1, 1]]), 2)
    assert np.array_equal(basis, np.array([[1, 1]]))


@given(matrices())
def test_rank_nullity_and_orthogonality(mp):
    m, p = mp
    basis = linalg.null_space(m, p)
    assert basis.shape[0] + linalg.rank(m, p) == m.shape[1]
    if basis.shape[0]:
        assert not linalg.matmul(m, basis.T, p).any()
    # every kernel row really is annihilated, checked entry-wise
    for row in basis:
        assert all(int(m[i] @ row) % p == 0 for i in range(m.shape[0]))


def test_row_space_equal():
    a = np.array([[1, 1, 0], [0, 0, 1]])
    b = np.array([[2, 2, 3], [0, 0, 4], [1, 1, 1]])
    assert linalg.row_space_equal(a, b, 5)
    c = np.array([[1, 0, 0]])
    assert not linalg.row_space_equal(a, c, 5)


def test_empty_matrix_conventions():
    empty = np.zeros((0, 4), dtype=np.int64)
    assert linalg.rank(empty, 5) == 0
    assert linalg.null_space(empty, 5).shape == (4, 4)
    assert linalg.row_space_contains(empty, [0, 0, 0, 0], 5)
    assert not linalg.row_space_contains(empty, [1, 0, 0, 0], 5)
