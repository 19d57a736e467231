"""Exact integer matrix helpers: range checks and Kronecker conventions."""

import numpy as np
import pytest

from catcirc import intmat


def test_asmatrix_shapes_and_values():
    m = intmat.asmatrix([[1, 2], [3, 4]])
    assert m.shape == (2, 2)
    assert m[1, 0] == 3
    assert all(isinstance(v, int) for v in m.flat)


def test_asmatrix_rejects_ragged_and_nonint():
    with pytest.raises(ValueError):
        intmat.asmatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        intmat.asmatrix([[1.5]])
    with pytest.raises(ValueError):
        intmat.asmatrix([[True]])


def test_asmatrix_empty_needs_shape():
    m = intmat.asmatrix([], shape=(0, 3))
    assert m.shape == (0, 3)
    with pytest.raises(ValueError):
        intmat.asmatrix([[1]], shape=(2, 1))


def test_matmul_exact():
    a = intmat.asmatrix([[1, 1], [0, 1]])
    b = intmat.asmatrix([[1, 0], [1, 1]])
    assert intmat.to_lists(intmat.matmul(a, b)) == [[2, 1], [1, 1]]


def test_matmul_empty_inner_dimension():
    a = intmat.asmatrix([], shape=(0, 2))
    b = intmat.asmatrix([[1], [2]])
    assert intmat.matmul(a, b).shape == (0, 1)
    c = intmat.asmatrix([[], []], shape=(2, 0))
    d = intmat.asmatrix([], shape=(0, 3))
    assert intmat.to_lists(intmat.matmul(c, d)) == [[0, 0, 0], [0, 0, 0]]


def test_matmul_overflow_is_an_error():
    big = intmat.asmatrix([[2**62]])
    with pytest.raises(OverflowError):
        intmat.matmul(big, big)


def test_matvec_overflow_is_an_error():
    big = intmat.asmatrix([[2**62]])
    with pytest.raises(OverflowError):
        intmat.matvec(big, (4,))


def test_kron_row_major():
    a = intmat.asmatrix([[0, 1], [1, 0]])
    eye = intmat.identity(2)
    res = intmat.to_lists(intmat.kron(a, eye))
    assert res == [
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
    ]


def test_kron_matches_numpy_on_int64_scale(rng):
    a = intmat.asmatrix([[int(v) for v in row] for row in rng.integers(0, 5, (3, 2))])
    b = intmat.asmatrix([[int(v) for v in row] for row in rng.integers(0, 5, (2, 4))])
    want = np.kron(np.array(intmat.to_lists(a)), np.array(intmat.to_lists(b)))
    assert intmat.to_lists(intmat.kron(a, b)) == want.tolist()


def test_permutation_matrix():
    p = intmat.permutation((2, 0, 1))
    assert intmat.to_lists(p) == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    with pytest.raises(ValueError):
        intmat.permutation((0, 0, 1))


def test_matrices_are_read_only():
    m = intmat.identity(2)
    with pytest.raises(ValueError):
        m[0, 0] = 5
