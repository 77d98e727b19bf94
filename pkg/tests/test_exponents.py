"""Exponent matrices: normalization, binding, views and expansion."""

import numpy as np
import pytest

from qcgirth.circulant import expand
from qcgirth.errors import BindCollisionError
from qcgirth.exponents import ExponentMatrix


def test_cells_sorted_and_reduced():
    E = ExponentMatrix.from_rows([[(3, 1), None, 9]], n=7)
    assert E.rows == (((1, 3), None, (2,)),)
    assert E.bound and E.n == 7
    U = ExponentMatrix.from_rows([[(5, -2)]])
    assert U.rows == (((-2, 5),),)
    assert not U.bound


def test_scalar_cells_and_shape():
    E = ExponentMatrix.from_rows([[0, 1], [2, None]])
    assert E.shape == (2, 2)
    assert E.cell(0, 1) == (1,) and E.cell(1, 1) is None


def test_unbound_duplicate_rejected():
    with pytest.raises(ValueError):
        ExponentMatrix.from_rows([[(4, 4)]])


def test_bound_collision_rejected():
    with pytest.raises(BindCollisionError) as info:
        ExponentMatrix.from_rows([[(0, 7)]], n=7)
    assert "(0, 0)" in str(info.value)


def test_bind_and_unbound_round_trip():
    U = ExponentMatrix.from_rows([[0, 1, 3, 7]])
    B = U.bind(5)
    assert B.n == 5 and B.cell(0, 3) == (2,)
    assert B.unbound().n is None
    with pytest.raises(BindCollisionError):
        ExponentMatrix.from_rows([[(0, 8)]]).bind(4)
    with pytest.raises(ValueError):
        U.bind(0)


def test_ragged_and_empty_rejected():
    with pytest.raises(ValueError):
        ExponentMatrix.from_rows([[0, 1], [0]])
    with pytest.raises(ValueError):
        ExponentMatrix.from_rows([])


def test_support_edges_single():
    E = ExponentMatrix.from_rows([[0, None, (1, 2)], [3, 4, None]], n=5)
    assert np.array_equal(
        E.support(), np.array([[True, False, True], [True, True, False]])
    )
    assert tuple(E.edges()) == ((0, 0, 0), (0, 2, 1), (0, 2, 2), (1, 0, 3), (1, 1, 4))
    assert not E.is_all_single()
    assert ExponentMatrix.from_rows([[0, 1]]).is_all_single()


def test_with_cell_mask_submatrix():
    E = ExponentMatrix.from_rows([[0, 1], [2, 3]], n=11, prelift_n1=None)
    F = E.with_cell(0, 1, (5, 6))
    assert F.cell(0, 1) == (5, 6) and F.n == 11
    M = E.mask(1, 0)
    assert M.cell(1, 0) is None and M.cell(0, 0) == (0,)
    S = E.submatrix([1])
    assert S.rows == (((2,), (3,)),)
    G = ExponentMatrix.from_rows([[0, 1]], n=10, prelift_n1=2)
    assert G.with_cell(0, 0, 4).prelift_n1 == 2
    assert G.mask(0, 1).prelift_n1 == 2


def test_expand_matches_block_expansion():
    rng = np.random.default_rng(5)
    for _ in range(30):
        n = int(rng.integers(2, 16))
        width = int(rng.integers(1, 5))
        rows = []
        for _ in range(int(rng.integers(1, 4))):
            row = []
            for _ in range(width):
                k = int(rng.integers(0, 3))
                if k == 0:
                    row.append(None)
                else:
                    vals = rng.choice(n, size=min(k, n), replace=False)
                    row.append(tuple(int(v) for v in vals))
            rows.append(row)
        if not any(c is not None for row in rows for c in row):
            continue
        E = ExponentMatrix.from_rows(rows, n=n)
        assert np.array_equal(E.expand(), expand(E.to_block()))
        nc, nv = E.shape
        assert E.expand().shape == (nc * n, nv * n)


def test_to_block_requires_bound():
    with pytest.raises(ValueError):
        ExponentMatrix.from_rows([[0, 1]]).to_block()
