import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from geproci import linalg
from geproci.linalg import (
    NotSquare,
    as_matrix,
    det,
    inv_matrix,
    kernel_basis,
    mat_mul,
    mat_vec,
    rank,
    rref,
)

from oracles import det_cofactor, rank_minors

P = 1073741827


def _small_matrix(rng, m, n):
    return [[rng.randrange(-5, 6) for _ in range(n)] for _ in range(m)]


def test_det_matches_cofactor_oracle():
    import random
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randrange(1, 5)
        M = _small_matrix(rng, n, n)
        assert det(as_matrix(M, P), P) == det_cofactor(M, P)


def test_rank_matches_minor_oracle():
    import random
    rng = random.Random(11)
    for _ in range(40):
        m, n = rng.randrange(1, 5), rng.randrange(1, 5)
        M = _small_matrix(rng, m, n)
        assert rank(as_matrix(M, P), P) == rank_minors(M, P)


def test_det_requires_square():
    with pytest.raises(NotSquare):
        det(as_matrix([[1, 2, 3], [4, 5, 6]], P), P)


def test_kernel_vectors_annihilate():
    import random
    rng = random.Random(13)
    for _ in range(30):
        m, n = rng.randrange(1, 6), rng.randrange(1, 6)
        M = as_matrix(_small_matrix(rng, m, n), P)
        ker = kernel_basis(M, P)
        assert len(ker) == n - rank(M, P)
        for v in ker:
            out = mat_vec(M, np.asarray(v, dtype=np.int64), P)
            assert not out.any()


def test_inv_matrix_round_trip():
    M = as_matrix([[2, 1, 0], [1, 3, 1], [0, 1, 4]], P)
    Minv = inv_matrix(M, P)
    assert np.array_equal(mat_mul(M, Minv, P), np.eye(3, dtype=np.int64))


def test_inv_matrix_singular_raises():
    M = as_matrix([[1, 2], [2, 4]], P)
    with pytest.raises(ValueError):
        inv_matrix(M, P)


def test_rref_pivots_are_unit_columns():
    M = as_matrix([[2, 4, 1], [1, 2, 3], [3, 6, 4]], P)
    R, pivots = rref(M, P)
    for r, c in enumerate(pivots):
        col = R[:, c]
        assert col[r] == 1
        assert sum(int(x) for x in col) == 1


def test_mat_mul_large_entries_no_overflow():
    # entries close to the prime; the 16-bit split must stay exact
    a = P - 2
    A = as_matrix([[a] * 64], P)
    B = as_matrix([[a]] * 64, P)
    got = mat_mul(A, B, P)[0, 0]
    assert got == (64 * a * a) % P


@given(st.integers(min_value=1, max_value=4), st.integers(min_value=0, max_value=10**6))
@settings(max_examples=60, deadline=None)
def test_det_multiplicative(n, seed):
    import random
    rng = random.Random(seed)
    A = as_matrix(_small_matrix(rng, n, n), P)
    B = as_matrix(_small_matrix(rng, n, n), P)
    assert det(mat_mul(A, B, P), P) == det(A, P) * det(B, P) % P


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=60, deadline=None)
def test_rank_bounded_by_shape(seed):
    import random
    rng = random.Random(seed)
    m, n = rng.randrange(1, 6), rng.randrange(1, 6)
    M = as_matrix(_small_matrix(rng, m, n), P)
    r = rank(M, P)
    assert 0 <= r <= min(m, n)
    assert rank(M.T.copy(), P) == r
