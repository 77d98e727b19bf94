"""Circulant polynomial arithmetic against a dense matrix reference."""

import numpy as np
import pytest

from qcgirth.circulant import BlockMatrix, CircPoly, excess, expand, require_binary
from qcgirth.errors import MultiEdgeError


def dense(p):
    """Reference circulant: term x^e puts coefficient at (k, (k+e) mod N)."""
    M = np.zeros((p.n, p.n), dtype=np.int64)
    for e, c in p.terms():
        for k in range(p.n):
            M[k, (k + e) % p.n] += c
    return M


def random_poly(rng, n, max_terms=4, max_coeff=3):
    terms = rng.integers(0, max_terms + 1)
    return CircPoly(
        n,
        (
            (int(rng.integers(-2 * n, 2 * n)), int(rng.integers(1, max_coeff + 1)))
            for _ in range(terms)
        ),
    )


def test_monomial_placement():
    p = expand(CircPoly.monomial(5, 3))
    expected = np.zeros((5, 5), dtype=np.int64)
    for k in range(5):
        expected[k, (k + 3) % 5] = 1
    assert np.array_equal(p, expected)


def test_exponents_reduce_and_accumulate():
    p = CircPoly(7, [(9, 1), (2, 2), (-5, 1)])
    assert p.terms() == ((2, 4),)
    q = CircPoly.from_exponents(7, [0, 7, 3])
    assert q.terms() == ((0, 2), (3, 1))
    assert q.max_coeff == 2 and q.weight == 3


def test_zero_one_support():
    z = CircPoly.zero(4)
    assert z.is_zero and z.weight == 0 and z.support == ()
    o = CircPoly.one(4)
    assert o.terms() == ((0, 1),)
    assert CircPoly.from_coeffs(4, [1, 0, 2, 0]).support == (0, 2)


def test_arithmetic_matches_dense_reference():
    rng = np.random.default_rng(7)
    for _ in range(120):
        n = int(rng.integers(1, 24))
        a, b = random_poly(rng, n), random_poly(rng, n)
        assert np.array_equal(expand(a + b), dense(a) + dense(b))
        assert np.array_equal(expand(a * b), dense(a) @ dense(b))
        assert np.array_equal(expand(a.transpose()), dense(a).T)
    a = random_poly(rng, 9)
    with pytest.raises(ValueError):
        a + random_poly(rng, 10)


def test_transpose_negates_exponents():
    p = CircPoly.from_exponents(11, [2, 5])
    assert p.transpose().support == (6, 9)


def test_dense_and_sparse_products_agree():
    # the multiply switches representation around a size limit; force both
    rng = np.random.default_rng(11)
    for n in (8, 5000):
        a, b = random_poly(rng, n), random_poly(rng, n)
        prod = a * b
        ref = {}
        for e1, c1 in a.terms():
            for e2, c2 in b.terms():
                key = (e1 + e2) % n
                ref[key] = ref.get(key, 0) + c1 * c2
        assert dict(prod.terms()) == {e: c for e, c in ref.items() if c}


def test_excess_truth_table():
    E = np.array([[0, 1], [2, 3]])
    F = np.array([[0, 0], [0, 1]])
    # 1 exactly where the left entry is >= 2 while the right entry is 0
    assert np.array_equal(excess(E, F), np.array([[0, 0], [1, 0]]))


def test_excess_shift_identity():
    rng = np.random.default_rng(3)
    for _ in range(40):
        A = rng.integers(0, 4, size=(4, 4))
        B = rng.integers(0, 4, size=(4, 4))
        assert np.array_equal(excess(A + B, A), excess(B, A))


def test_block_matrix_ops_match_expansion():
    rng = np.random.default_rng(23)
    for _ in range(40):
        n = int(rng.integers(2, 12))
        r, k, c = (int(rng.integers(1, 4)) for _ in range(3))
        A = BlockMatrix(n, [[random_poly(rng, n, 2) for _ in range(k)] for _ in range(r)])
        B = BlockMatrix(n, [[random_poly(rng, n, 2) for _ in range(c)] for _ in range(k)])
        assert np.array_equal(expand(A @ B), expand(A) @ expand(B))
        assert np.array_equal(expand(A.transpose()), expand(A).T)
        if k == r:
            C = BlockMatrix(n, [[random_poly(rng, n, 2) for _ in range(k)] for _ in range(r)])
            assert np.array_equal(expand(A + C), expand(A) + expand(C))


def test_block_identity_and_zero():
    I = BlockMatrix.identity(5, 3)
    assert np.array_equal(expand(I), np.eye(15, dtype=np.int64))
    Z = BlockMatrix.zero(5, 2, 3)
    assert expand(Z).shape == (10, 15) and not expand(Z).any()
    assert I.row_weights() == (1, 1, 1)


def test_require_binary():
    require_binary(np.eye(3, dtype=np.int64))
    with pytest.raises(MultiEdgeError):
        require_binary(expand(CircPoly(3, [(1, 2)])))
