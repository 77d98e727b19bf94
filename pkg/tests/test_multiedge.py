"""Doubled-diagonal 4 x 8 family: reduced form, overlaps, girth-6 check."""

import numpy as np
import pytest

from qcgirth.circulant import expand
from qcgirth.errors import BindCollisionError
from qcgirth.girth import overlap_matrix
from qcgirth.multiedge import (
    CCSDS_128_64,
    CcsdsForm,
    ccsds_CH,
    ccsds_girth6_check,
    ccsds_to_exponent_matrix,
)
from qcgirth.oracle import girth_bfs_oracle
from qcgirth.report import METHOD_CONDITIONS


def random_form(rng, n):
    rows = []
    for i in range(4):
        row = [int(rng.integers(-n, 2 * n)) for _ in range(8)]
        row[i] = int(rng.integers(1, n))
        row[4 + i] = None
        row[4 + (i + 3) % 4] = 0
        rows.append(tuple(row))
    return CcsdsForm(*rows, n=n)


def test_form_validation():
    good = CCSDS_128_64
    with pytest.raises(ValueError):
        CcsdsForm(good.a, good.b, good.c, good.d, n=0)
    with pytest.raises(ValueError):
        CcsdsForm(good.a[:7], good.b, good.c, good.d, n=16)
    bad_zero = (7, 2, 14, 6, 5, 0, 13, 0)
    with pytest.raises(ValueError):
        CcsdsForm(bad_zero, good.b, good.c, good.d, n=16)
    not_int = (7, 2, 14.5, 6, None, 0, 13, 0)
    with pytest.raises(ValueError):
        CcsdsForm(not_int, good.b, good.c, good.d, n=16)
    unpinned = (7, 2, 14, 6, None, 0, 13, 1)
    with pytest.raises(ValueError):
        CcsdsForm(unpinned, good.b, good.c, good.d, n=16)
    # pinned entries may be any multiple of n
    shifted = (7, 2, 14, 6, None, 0, 13, 32)
    CcsdsForm(shifted, good.b, good.c, good.d, n=16)


def test_exponent_grid_of_builtin():
    E = ccsds_to_exponent_matrix(CCSDS_128_64)
    assert E.shape == (4, 8) and E.n == 16
    assert E.cell(0, 0) == (0, 7)
    assert E.cell(1, 1) == (0, 15)
    assert E.cell(0, 4) is None
    assert E.cell(0, 7) == (0,)
    H = E.expand()
    assert H.shape == (64, 128)
    assert set(H.sum(axis=1)) == {8}
    assert set(H.sum(axis=0)) == {3, 5}
    # left-half columns carry the doubled diagonal, right-half ones do not
    assert set(H[:, :64].sum(axis=0)) == {5}
    assert set(H[:, 64:].sum(axis=0)) == {3}


def test_builtin_passes_and_has_girth_6():
    report = ccsds_girth6_check(CCSDS_128_64)
    assert report.passed and report.girth == 6
    assert report.method == METHOD_CONDITIONS
    assert report.witnesses == ()
    H = ccsds_to_exponent_matrix(CCSDS_128_64).expand()
    assert girth_bfs_oracle(H, witness=False).girth == 6


def test_forced_violations_are_labeled():
    m = CcsdsForm(
        a=(8, 2, 14, 6, None, 0, 13, 0),
        b=CCSDS_128_64.b,
        c=CCSDS_128_64.c,
        d=CCSDS_128_64.d,
        n=16,
    )
    report = ccsds_girth6_check(m)
    assert not report.passed and report.girth is None
    assert report.witnesses == (
        ("2a1", 0, (8, 8)),
        ("pool ab", 2, ("a2", "a1-b1")),
    )


def test_overlap_formula_matches_block_route():
    rng = np.random.default_rng(47)
    cases = 0
    while cases < 200:
        n = int(rng.integers(2, 65))
        m = random_form(rng, n)
        lhs = ccsds_CH(m)
        rhs = overlap_matrix(ccsds_to_exponent_matrix(m).to_block())
        assert lhs.n == rhs.n == n
        assert np.array_equal(expand(lhs), expand(rhs))
        cases += 1
    # and the published form agrees too
    builtin = ccsds_CH(CCSDS_128_64)
    block = overlap_matrix(ccsds_to_exponent_matrix(CCSDS_128_64).to_block())
    assert np.array_equal(expand(builtin), expand(block))


def oracle_verdict(m):
    """True when the expansion is a 0/1 matrix of girth above 4."""
    try:
        H = ccsds_to_exponent_matrix(m).expand()
    except BindCollisionError:
        return False
    g = girth_bfs_oracle(H, witness=False).girth
    return g is None or g > 4


def test_check_agrees_with_oracle():
    rng = np.random.default_rng(53)
    passes = fails = 0
    for _ in range(60):
        m = random_form(rng, int(rng.integers(4, 25)))
        ok = ccsds_girth6_check(m).passed
        assert ok == oracle_verdict(m)
        passes += ok
        fails += not ok
    for _ in range(60):
        m = random_form(rng, int(rng.choice((127, 257))))
        ok = ccsds_girth6_check(m).passed
        assert ok == oracle_verdict(m)
        passes += ok
        fails += not ok
    # the sweep must exercise both verdicts to mean anything
    assert passes > 10 and fails > 10


def test_check_catches_diagonal_collision():
    rows = [list(r) for r in CCSDS_128_64.rows]
    rows[2][2] = 16  # reduces to 0 mod 16: the doubled cell degenerates
    m = CcsdsForm(*(tuple(r) for r in rows), n=16)
    report = ccsds_girth6_check(m)
    assert not report.passed
    assert report.witnesses[0][0] == "2c3"
    with pytest.raises(BindCollisionError):
        ccsds_to_exponent_matrix(m)
