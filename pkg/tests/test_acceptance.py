"""Acceptance gate: one test per published target, plus the property suites.

Every girth figure is measured twice (power criterion and graph search)
and the two answers must agree.  Two tests pin target values that the
shipped exponent tables measurably do not reach; they are kept faithful
to the recorded targets and fail, so the gap stays visible.  The rest of
the suite is green.
"""

from itertools import combinations

import numpy as np
import pytest

from qcgirth import catalog
from qcgirth.circulant import BlockMatrix, CircPoly, excess, expand
from qcgirth.conditions import SUPPORTED, check_conditions
from qcgirth.construct import construct, nmin_search
from qcgirth.errors import BindCollisionError
from qcgirth.exponents import ExponentMatrix
from qcgirth.girth import girth_via_powers, overlap_matrix, two_row_girth_relation
from qcgirth.multiedge import CCSDS_128_64, ccsds_girth6_check, ccsds_to_exponent_matrix
from qcgirth.oracle import girth_bfs_oracle, min_distance_nullspace
from qcgirth.prelift import matrix_prelift

MAX_GIRTH = 24


def both_girth(E, max_girth=MAX_GIRTH):
    """Girth by the power criterion and the graph oracle, which must agree."""
    power = girth_via_powers(E.to_block(), l_max=max_girth // 2)
    bfs = girth_bfs_oracle(E.expand(), witness=False)
    if power.girth is None:
        assert bfs.girth is None or bfs.girth > power.checked_up_to, (
            f"power claims girth > {power.checked_up_to}, "
            f"graph search found {bfs.girth}"
        )
        return bfs.girth
    assert power.girth == bfs.girth, (
        f"power says {power.girth}, graph search says {bfs.girth}"
    )
    return power.girth


def block_girth(C, max_girth=MAX_GIRTH):
    """Same dual measurement for a matrix already in block form."""
    power = girth_via_powers(C, l_max=max_girth // 2)
    bfs = girth_bfs_oracle(expand(C), witness=False)
    if power.girth is None:
        assert bfs.girth is None or bfs.girth > power.checked_up_to
        return bfs.girth
    assert power.girth == bfs.girth
    return power.girth


def test_criterion_01_two_row_exact_girths():
    assert both_girth(catalog.TWO_ROW_GIRTH8.bind(8)) == 8
    assert both_girth(catalog.TWO_ROW_GIRTH12.bind(77)) == 12
    print("criterion 1: pass (girth 8 at N=8, girth 12 at N=77)")


def test_criterion_02_doubled_row_and_weight3_circulant():
    assert both_girth(catalog.TWO_ROW_DOUBLED.bind(73)) == 12
    weight3 = ExponentMatrix.from_rows([[(0, 1, 3)]], n=7)
    assert both_girth(weight3) == 6
    print("criterion 2: pass (doubled row girth 12 at N=73, weight-3 girth 6 at N=7)")


def test_criterion_03_split_triple_ladder():
    # Recorded targets: the two-row form reaches 16/20/24 at sizes 7/11/31
    # and the compact form 8/10/12 at the same sizes.  The shipped tables
    # measure one ladder step lower (the compact form does not even bind
    # at size 7), so this test fails and documents the gap.
    measured = {}
    for n2 in (7, 11, 31):
        try:
            measured[("compact", n2)] = both_girth(catalog.SPLIT_TRIPLE.bind(n2))
        except BindCollisionError:
            measured[("compact", n2)] = 2
        measured[("two-row", n2)] = both_girth(
            catalog.SPLIT_TRIPLE_TWO_ROW.bind(n2)
        )
    stated = {
        ("compact", 7): 8, ("compact", 11): 10, ("compact", 31): 12,
        ("two-row", 7): 16, ("two-row", 11): 20, ("two-row", 31): 24,
    }
    print(f"criterion 3: measured {measured}")
    assert measured == stated, (
        f"recorded targets {stated} not met, measured {measured}; the same "
        "ladder holds one size later (11/31/41)"
    )
    print("criterion 3: pass")


def test_criterion_04_two_step_view_and_its_overlap():
    view = catalog.TWO_STEP_GIRTH10_VIEW.bind(27)
    assert both_girth(view) == 10
    assert block_girth(overlap_matrix(view.to_block())) == 6
    print("criterion 4: pass (view girth 10 at N2=27, overlap girth 6)")


def test_criterion_05_wide_girth10_and_its_nmin():
    assert both_girth(catalog.THREE_ROW_GIRTH10_WIDE.bind(514)) == 10
    result = nmin_search(catalog.THREE_ROW_GIRTH10_WIDE, 10)
    assert result.status == "found" and result.n_min == 514
    print("criterion 5: pass (3x8 girth 10 at N=514, n_min search agrees)")


def test_criterion_06_three_row_nmin_values():
    r1 = nmin_search(catalog.THREE_ROW_GIRTH10, 10)
    assert r1.status == "found" and r1.n_min == 158
    r2 = nmin_search(catalog.THREE_ROW_GIRTH12, 10)
    assert r2.status == "found" and r2.n_min == 222
    r3 = nmin_search(catalog.THREE_ROW_GIRTH12, 12)
    assert r3.status == "found" and r3.n_min == 328
    r4 = nmin_search(catalog.THREE_ROW_GIRTH10, 12)
    assert r4.status == "no-n" and r4.witness is not None
    print("criterion 6: pass (n_min 158/222/328, girth-12 obstruction found)")


def test_criterion_07_wide_girth12_at_1245():
    assert both_girth(catalog.THREE_ROW_GIRTH12_WIDE.bind(1245)) == 12
    print("criterion 7: pass (3x8 girth 12 at N=1245)")


def test_criterion_08_four_row_reproduction():
    for target, table, n_min in (
        (6, catalog.FOUR_ROW_GIRTH6, 12),
        (8, catalog.FOUR_ROW_GIRTH8, 55),
    ):
        res = construct(4, 8, target)
        assert res.matrix == table, f"girth-{target} table not reproduced"
        assert res.n_min == n_min
        bound = res.matrix.bind(res.n_min)
        assert check_conditions(bound, target).passed
        assert both_girth(bound) >= target
    print("criterion 8: pass (4x8 tables reproduced, n_min 12 and 55)")


def test_criterion_08_three_row_fallback():
    # three-row outputs are accepted by property: conditions hold over the
    # integers and the target girth is reached at the computed n_min.
    for target in (6, 8):
        res = construct(3, 8, target)
        assert check_conditions(res.matrix, target).passed
        assert both_girth(res.matrix.bind(res.n_min)) >= target
    print("criterion 8 (3-row halves): pass (integer conditions + girth at n_min)")


def test_criterion_09_girth14_views_and_their_bases():
    assert both_girth(catalog.GIRTH14_VIEW.bind(752)) == 14
    assert both_girth(catalog.GIRTH14_ALT_VIEW.bind(605)) == 14
    assert both_girth(catalog.GIRTH14_BASE.bind(279)) == 12
    assert both_girth(catalog.GIRTH14_ALT_BASE.bind(245)) == 12
    print("criterion 9: pass (girth 14 at 752 and 605, bases 12 at 279 and 245)")


def test_criterion_10_masked_view_girth14():
    assert both_girth(catalog.MASKED_GIRTH14_VIEW.bind(891)) == 14
    print("criterion 10 (masked half): pass (girth 14 at N2=891)")


def test_criterion_10_regular_completion_girth12():
    # Recorded target: filling the three masked cells back in caps the
    # girth at 12.  The shipped completion measures 10, so this test
    # fails and keeps the one-digit discrepancy visible.
    g = both_girth(catalog.completed_masked_view().bind(891))
    print(f"criterion 10 (completion half): measured girth {g}")
    assert g == 12, f"recorded target 12 not met, measured {g}"
    print("criterion 10 (completion half): pass")


def test_criterion_11_modified_split_view():
    assert both_girth(catalog.g12_split_view_modified(123)) == 10
    assert both_girth(catalog.g12_split_view_modified(164)) == 12
    print("criterion 11: pass (modified view girth 10 at 123 and 12 at 164)")


def test_criterion_12_ccsds_builtin():
    report = ccsds_girth6_check(CCSDS_128_64)
    assert report.passed and report.girth == 6
    H = ccsds_to_exponent_matrix(CCSDS_128_64).expand()
    assert girth_bfs_oracle(H, witness=False).girth == 6
    print("criterion 12: pass (girth-6 check and oracle agree at N=16)")


def test_criterion_13a_triangle_identity():
    rng = np.random.default_rng(1301)
    for _ in range(200):
        shape = (int(rng.integers(1, 7)), int(rng.integers(1, 7)))
        A = rng.integers(0, 6, size=shape)
        B = rng.integers(0, 6, size=shape)
        assert np.array_equal(excess(A + B, A), excess(B, A))
    for _ in range(20):
        n = int(rng.integers(2, 12))
        shape = (int(rng.integers(1, 4)), int(rng.integers(1, 4)))
        def rand_block():
            cells = [
                [
                    CircPoly(n, [(int(rng.integers(0, n)), int(rng.integers(0, 3)))
                                 for _ in range(int(rng.integers(0, 4)))])
                    for _ in range(shape[1])
                ]
                for _ in range(shape[0])
            ]
            return BlockMatrix(n, cells)
        A, B = rand_block(), rand_block()
        assert np.array_equal(
            expand(excess(A + B, A)), expand(excess(B, A))
        )
    print("criterion 13a: pass (220 triangle-identity cases)")


def random_exponent_matrix(rng, nc, nv, n, hole=0.2, multi=0.2):
    """Random bound matrix with no empty rows and no intra-cell repeats."""
    while True:
        rows = []
        for _ in range(nc):
            row = []
            for _ in range(nv):
                roll = rng.random()
                if roll < hole:
                    row.append(None)
                elif roll < hole + multi and n >= 2:
                    pair = rng.choice(n, size=2, replace=False)
                    row.append(tuple(int(v) for v in pair))
                else:
                    row.append(int(rng.integers(0, n)))
            rows.append(row)
        if all(any(c is not None for c in row) for row in rows):
            return ExponentMatrix.from_rows(rows, n=n)


def test_criterion_13b_power_vs_graph_search():
    rng = np.random.default_rng(1302)
    l_max = 16
    for _ in range(200):
        E = random_exponent_matrix(
            rng,
            int(rng.integers(1, 5)),
            int(rng.integers(1, 7)),
            int(rng.integers(2, 65)),
        )
        power = girth_via_powers(E.to_block(), l_max=l_max)
        bfs = girth_bfs_oracle(E.expand(), witness=False)
        if power.girth is None:
            assert bfs.girth is None or bfs.girth > 2 * l_max
        else:
            assert power.girth == bfs.girth
    print("criterion 13b: pass (200 power-vs-search cases)")


def test_criterion_13c_conditions_iff_oracle():
    rng = np.random.default_rng(1303)
    per_pair = 16
    for nc, target in sorted(SUPPORTED):
        for _ in range(per_pair):
            nv = int(rng.integers(2, 7))
            n = int(rng.integers(6, 65))
            rows = [
                [int(rng.integers(0, n)) for _ in range(nv)] for _ in range(nc)
            ]
            E = ExponentMatrix.from_rows(rows, n=n)
            claimed = check_conditions(E, target).passed
            g = girth_bfs_oracle(E.expand(), witness=False).girth
            reached = g is None or g >= target
            assert claimed == reached, (
                f"conditions for girth {target} on {nc}x{nv} at N={n} said "
                f"{claimed}, oracle girth is {g}"
            )
    print(f"criterion 13c: pass ({per_pair * len(SUPPORTED)} biconditional cases)")


def test_criterion_13d_two_row_relation():
    rng = np.random.default_rng(1304)
    for _ in range(120):
        k = int(rng.integers(2, 7))
        n = int(rng.integers(2, 33))
        rows = [
            [int(rng.integers(0, n)) for _ in range(k)] for _ in range(2)
        ]
        H = ExponentMatrix.from_rows(rows, n=n).to_block()
        rep_h, rep_c, _ = two_row_girth_relation(H)
        assert rep_h.girth == 2 * rep_c.girth
    for _ in range(80):
        k = int(rng.integers(2, 6))
        n1 = int(rng.integers(2, 5))
        n2 = int(rng.integers(2, 9))
        rows = [
            [int(rng.integers(0, n1 * n2)) for _ in range(k)] for _ in range(2)
        ]
        E = ExponentMatrix.from_rows(rows, n=n1 * n2)
        view = matrix_prelift(E, n1)
        rep_h, rep_c, _ = two_row_girth_relation(
            view.matrix.to_block(), rows_per_side=n1
        )
        assert rep_h.girth == 2 * rep_c.girth
    print("criterion 13d: pass (200 doubling-relation cases)")


def test_criterion_13e_prelift_equivalence():
    rng = np.random.default_rng(1305)
    for _ in range(200):
        n1 = int(rng.integers(1, 7))
        n2 = int(rng.integers(2, 13))
        E = random_exponent_matrix(
            rng,
            int(rng.integers(1, 4)),
            int(rng.integers(1, 5)),
            n1 * n2,
        )
        view = matrix_prelift(E, n1)
        moved = view.matrix.expand()[np.ix_(view.row_perm, view.col_perm)]
        assert np.array_equal(E.expand(), moved)
    print("criterion 13e: pass (200 restructuring-equivalence cases)")


def test_criterion_13f_all_one_2x3_caps_girth_at_12():
    rng = np.random.default_rng(1306)
    for _ in range(200):
        nc = int(rng.integers(2, 5))
        nv = int(rng.integers(3, 7))
        n = int(rng.integers(4, 65))
        E = random_exponent_matrix(rng, nc, nv, n, hole=0.3, multi=0.0)
        ri = rng.choice(nc, size=2, replace=False)
        ci = rng.choice(nv, size=3, replace=False)
        for i in ri:
            for j in ci:
                E = E.with_cell(int(i), int(j), int(rng.integers(0, n)))
        g = girth_bfs_oracle(E.expand(), witness=False).girth
        assert g is not None and g <= 12
    print("criterion 13f: pass (200 capped-girth cases)")


def test_criterion_13g_overlap_girth_caps():
    rng = np.random.default_rng(1307)
    for _ in range(100):
        n = int(rng.integers(4, 65))
        E = random_exponent_matrix(
            rng, 3, int(rng.integers(2, 7)), n, hole=0.0, multi=0.0
        )
        g = girth_bfs_oracle(
            expand(overlap_matrix(E.to_block())), witness=False
        ).girth
        assert g is not None and g <= 6
    for _ in range(100):
        n = int(rng.integers(4, 65))
        nc = int(rng.integers(4, 6))
        E = random_exponent_matrix(
            rng, nc, int(rng.integers(2, 7)), n, hole=0.0, multi=0.0
        )
        g = girth_bfs_oracle(
            expand(overlap_matrix(E.to_block())), witness=False
        ).girth
        assert g is not None and g <= 4
    print("criterion 13g: pass (200 overlap-cap cases)")


def test_criterion_14_split_triple_distance():
    H = catalog.SPLIT_TRIPLE.bind(31).expand()
    result = min_distance_nullspace(H, max_dim=28)
    if result.status == "infeasible":
        pytest.skip(f"Infeasible({result.dimension}): enumeration waived")
    assert result.status == "exact"
    assert result.dimension == 5
    assert result.distance == 48
    print("criterion 14: pass (dimension 5, exact distance 48)")
