"""Closed-form girth conditions on exponent matrices, and cycle sums.

Everything here works directly on the exponents.  A bound matrix is checked
modulo its lift size; an unbound matrix is checked over the integers, which
certifies the girth for every lift size at once (modulo the finitely many
sizes that a cycle-sum residue rules out, which `nmin_search` scans).

All conditions are phrased for a matrix whose cells hold one exponent each
with no zero cells.  The first row is normalized away by rescaling each
column, which relabels vertices inside the blocks and leaves the Tanner
graph unchanged, so only differences against row 0 matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import UnsupportedParametersError
from .exponents import ExponentMatrix
from .report import METHOD_CONDITIONS, METHOD_CYCLE_SUMS, GirthReport

SUPPORTED = {
    (2, 6),
    (2, 8),
    (2, 10),
    (2, 12),
    (2, 14),
    (3, 6),
    (3, 8),
    (3, 10),
    (3, 12),
    (4, 6),
    (4, 8),
    (4, 10),
    (4, 12),
}


def _norm(value: int, mod: int | None) -> int:
    return value % mod if mod else value


@dataclass(frozen=True)
class _Distinct:
    """All listed values must be pairwise different (a 'maximal' set)."""

    name: str
    items: tuple  # of (value, label)

    def violations(self, mod):
        seen: dict[int, list] = {}
        for value, label in self.items:
            seen.setdefault(_norm(value, mod), []).append(label)
        return [
            (self.name, v, tuple(labels))
            for v, labels in sorted(seen.items())
            if len(labels) >= 2
        ]


@dataclass(frozen=True)
class _Guarded:
    """A repeated value is a violation unless the guard set contains it."""

    name: str
    items: tuple  # of (value, label)
    guard: tuple  # of values

    def violations(self, mod):
        guard = {_norm(v, mod) for v in self.guard}
        seen: dict[int, list] = {}
        for value, label in self.items:
            seen.setdefault(_norm(value, mod), []).append(label)
        return [
            (self.name, v, tuple(labels))
            for v, labels in sorted(seen.items())
            if len(labels) >= 2 and v not in guard
        ]


def _reduced(E: ExponentMatrix):
    base = [cell[0] for cell in E.rows[0]]
    return [
        [cell[0] - b for cell, b in zip(row, base)] for row in E.rows[1:]
    ]


def _pairs(n):
    return [(u, v) for u in range(n) for v in range(n) if u != v]


# -- condition builders per (rows, girth) -----------------------------------


def _two_row(rows, girth, nv):
    (i,) = rows
    conds = []
    shifts = _Distinct("row-shifts", tuple((i[l], ("col", l)) for l in range(nv)))
    diffs = _Distinct(
        "shift-differences",
        tuple((i[u] - i[v], ("cols", u, v)) for u, v in _pairs(nv)),
    )
    if girth in (6, 8):
        conds.append(shifts)
    elif girth in (10, 12):
        conds.append(diffs)
    else:  # girth 14: shift cubes must stay on the shift support
        conds.extend([shifts, diffs])
        items = tuple(
            (i[u] - i[v] + i[w], ("cols", u, v, w))
            for u in range(nv)
            for v in range(nv)
            for w in range(nv)
        )
        conds.append(_Guarded("three-step-products", items, tuple(i)))
    return conds


def _three_row_basic(rows, nv):
    i, j = rows
    return [
        _Distinct("row1-shifts", tuple((i[l], ("col", l)) for l in range(nv))),
        _Distinct("row2-shifts", tuple((j[l], ("col", l)) for l in range(nv))),
        _Distinct(
            "row1-row2-gaps", tuple((i[l] - j[l], ("col", l)) for l in range(nv))
        ),
    ]


def _three_row_girth8(rows, nv):
    i, j = rows
    conds = []
    for l in range(nv):
        others = [s for s in range(nv) if s != l]
        conds.append(
            _Distinct(
                f"col{l}-differences",
                tuple((i[l] - i[s], ("row1", s)) for s in others)
                + tuple((j[l] - j[s], ("row2", s)) for s in others),
            )
        )
        conds.append(
            _Distinct(
                f"col{l}-row1-returns",
                tuple((i[s], ("shift", s)) for s in others)
                + tuple((i[s] - j[s] + j[l], ("via-row2", s)) for s in others),
            )
        )
        conds.append(
            _Distinct(
                f"col{l}-row2-returns",
                tuple((j[s], ("shift", s)) for s in others)
                + tuple((j[s] - i[s] + i[l], ("via-row1", s)) for s in others),
            )
        )
    return conds


def _three_row_girth10(rows, nv):
    i, j = rows
    s1 = tuple((i[u] - i[v], ("row1", u, v)) for u, v in _pairs(nv))
    s2 = tuple((j[u] - j[v], ("row2", u, v)) for u, v in _pairs(nv))
    s3 = tuple(
        ((i[u] - j[u]) - (i[v] - j[v]), ("gap", u, v)) for u, v in _pairs(nv)
    )
    return [
        _Distinct("row1-vs-row2-differences", s1 + s2),
        _Distinct("row1-vs-gap-differences", s1 + s3),
        _Distinct("row2-vs-gap-differences", s2 + s3),
    ]


def _three_row_girth12(rows, nv):
    """Five-step walk conditions on top of the girth-10 sets.

    A repeated five-step value is excused exactly when the value itself also
    arises from a shorter walk (it then sits in the guard support); matching
    the walks pairwise by index is not enough, because two formally
    different index patterns may collide numerically with a guard value.
    """
    i, j = rows
    conds = _three_row_girth10(rows, nv)
    every = [(u, v) for u in range(nv) for v in range(nv)]
    for l in range(nv):
        items1 = (
            tuple((i[v] - i[u], ("row1-sq", u, v)) for u, v in every)
            + tuple((j[v] - j[u], ("row2-sq", u, v)) for u, v in every)
            + tuple(
                (i[l] + (j[v] - i[v]) - j[u], ("cross-12", u, v)) for u, v in every
            )
            + tuple(
                (j[l] + (i[v] - j[v]) - i[u], ("cross-21", u, v)) for u, v in every
            )
        )
        guard1 = (
            (0,)
            + tuple(i[l] - i[u] for u in range(nv))
            + tuple(j[l] - j[u] for u in range(nv))
        )
        conds.append(_Guarded(f"col{l}-walks-top", items1, guard1))

        items2 = (
            tuple(((i[u] - j[u]) + j[v], ("turn", u, v)) for u, v in every)
            + tuple((i[l] + i[u] - i[v], ("row1-sq", u, v)) for u, v in every)
            + tuple(
                (i[l] + (i[u] - j[u]) - (i[v] - j[v]), ("gap-sq", u, v))
                for u, v in every
            )
            + tuple((j[l] + i[u] - j[v], ("cross", u, v)) for u, v in every)
        )
        guard2 = (
            (i[l],)
            + tuple(i[u] for u in range(nv))
            + tuple(j[l] + i[u] - j[u] for u in range(nv))
        )
        conds.append(_Guarded(f"col{l}-walks-row1", items2, guard2))

        items3 = (
            tuple(((j[u] - i[u]) + i[v], ("turn", u, v)) for u, v in every)
            + tuple((j[l] + j[u] - j[v], ("row2-sq", u, v)) for u, v in every)
            + tuple(
                (j[l] + (j[u] - i[u]) - (j[v] - i[v]), ("gap-sq", u, v))
                for u, v in every
            )
            + tuple((i[l] + j[u] - i[v], ("cross", u, v)) for u, v in every)
        )
        guard3 = (
            (j[l],)
            + tuple(j[u] for u in range(nv))
            + tuple(i[l] + j[u] - i[u] for u in range(nv))
        )
        conds.append(_Guarded(f"col{l}-walks-row2", items3, guard3))
    return conds


def _four_row_basic(rows, nv):
    i, j, k = rows
    named = [("row1", i), ("row2", j), ("row3", k)]
    conds = [
        _Distinct(f"{nm}-shifts", tuple((r[l], ("col", l)) for l in range(nv)))
        for nm, r in named
    ]
    for (na, a), (nb, b) in combinations(named, 2):
        conds.append(
            _Distinct(
                f"{na}-{nb}-gaps",
                tuple((a[l] - b[l], ("col", l)) for l in range(nv)),
            )
        )
    return conds


def _four_row_girth8(rows, nv):
    i, j, k = rows
    conds = []
    for l in range(nv):
        others = [s for s in range(nv) if s != l]
        conds.append(
            _Distinct(
                f"col{l}-differences",
                tuple((i[l] - i[s], ("row1", s)) for s in others)
                + tuple((j[l] - j[s], ("row2", s)) for s in others)
                + tuple((k[l] - k[s], ("row3", s)) for s in others),
            )
        )
        conds.append(
            _Distinct(
                f"col{l}-row1-returns",
                tuple((i[s], ("shift", s)) for s in others)
                + tuple((i[s] - j[s] + j[l], ("via-row2", s)) for s in others)
                + tuple((i[s] - k[s] + k[l], ("via-row3", s)) for s in others),
            )
        )
        conds.append(
            _Distinct(
                f"col{l}-row2-returns",
                tuple((j[s], ("shift", s)) for s in others)
                + tuple((j[s] - i[s] + i[l], ("via-row1", s)) for s in others)
                + tuple((j[s] - k[s] + k[l], ("via-row3", s)) for s in others),
            )
        )
        conds.append(
            _Distinct(
                f"col{l}-row3-returns",
                tuple((k[s], ("shift", s)) for s in others)
                + tuple((k[s] - i[s] + i[l], ("via-row1", s)) for s in others)
                + tuple((k[s] - j[s] + j[l], ("via-row2", s)) for s in others),
            )
        )
    return conds


# -- block walk conditions over the exponent domain --------------------------
#
# For four rows and girth 10/12 no compact set form is available, so the
# power criterion itself is evaluated on block matrices of Laurent
# polynomials (dict exponent -> multiplicity), over Z when unbound.


def _lmul(a: dict, b: dict, mod) -> dict:
    out: dict[int, int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = _norm(ea + eb, mod)
            out[e] = out.get(e, 0) + ca * cb
    return out


def _lblock_mul(A, B, mod):
    rs, ks, cs = len(A), len(B), len(B[0])
    out = []
    for i in range(rs):
        row = []
        for j in range(cs):
            acc: dict[int, int] = {}
            for k in range(ks):
                if not A[i][k] or not B[k][j]:
                    continue
                for e, c in _lmul(A[i][k], B[k][j], mod).items():
                    acc[e] = acc.get(e, 0) + c
            row.append(acc)
        out.append(row)
    return out


def _lblock_add(A, B):
    out = []
    for ra, rb in zip(A, B):
        row = []
        for a, b in zip(ra, rb):
            cell = dict(a)
            for e, c in b.items():
                cell[e] = cell.get(e, 0) + c
            row.append(cell)
        out.append(row)
    return out


def _lblock_tr(A, mod):
    rs, cs = len(A), len(A[0])
    return [
        [{_norm(-e, mod): c for e, c in A[i][j].items()} for i in range(rs)]
        for j in range(cs)
    ]


def _lidentity(size):
    return [[{0: 1} if i == j else {} for j in range(size)] for i in range(size)]


def _power_conditions(E: ExponentMatrix, girth: int):
    """Walk-count conditions for t = 2 .. (girth-2)/2 on the block level.

    Returns a list of condition evaluations shaped like the set checkers:
    (name, value, labels) violations, where labels carry the block cell.
    """
    mod = E.n
    nc, nv = E.shape
    H = [[{cell[0]: 1} for cell in row] for row in E.rows]
    Ht = _lblock_tr(H, mod)
    G = _lblock_mul(H, Ht, mod)
    for idx in range(nc):
        G[idx][idx][0] -= nv
        if not G[idx][idx][0]:
            del G[idx][idx][0]
    power = G
    guard = _lidentity(nc)
    violations = []
    t_top = (girth - 2) // 2
    for t in range(2, t_top + 1):
        if t % 2 == 0:
            lhs, rhs = power, guard
        else:
            lhs, rhs = _lblock_mul(power, H, mod), _lblock_mul(guard, H, mod)
        for bi in range(len(lhs)):
            for bj in range(len(lhs[0])):
                guard_support = set(rhs[bi][bj])
                for e, c in sorted(lhs[bi][bj].items()):
                    if c >= 2 and e not in guard_support:
                        violations.append(
                            (f"walks-t{t}", e, (("block", bi, bj), ("count", c)))
                        )
        if t % 2 == 1 and t < t_top:
            guard = _lblock_add(guard, power)
            power = _lblock_mul(power, G, mod)
    return violations


# -- dispatch -----------------------------------------------------------------


def _direct_violations(E: ExponentMatrix, girth: int):
    nc, nv = E.shape
    rows = _reduced(E)
    mod = E.n
    if nc == 2:
        conds = _two_row(rows, girth, nv)
    elif nc == 3:
        if girth == 6:
            conds = _three_row_basic(rows, nv)
        elif girth == 8:
            conds = _three_row_girth8(rows, nv)
        elif girth == 10:
            conds = _three_row_girth10(rows, nv)
        else:
            conds = _three_row_girth12(rows, nv)
    else:  # nc == 4
        if girth == 6:
            conds = _four_row_basic(rows, nv)
        elif girth == 8:
            conds = _four_row_girth8(rows, nv)
        else:
            return _power_conditions(E, girth)
    out = []
    for cond in conds:
        out.extend(cond.violations(mod))
    return out


def check_conditions(E: ExponentMatrix, girth: int) -> GirthReport:
    """Certify girth >= `girth` through the closed-form conditions.

    Supports 2, 3 or 4 rows for girth 6..12 (14 for two rows), and more
    rows whenever the target reduces to row subsets of at most four rows.
    Cells must hold exactly one exponent each (no zero cells).  Violations
    are all collected, not just the first: each witness is a tuple
    (condition name, colliding value, labels of the colliding walks).
    """
    if girth % 2 or girth < 6:
        raise UnsupportedParametersError(f"girth {girth} is not a supported target")
    if not E.is_all_single():
        raise UnsupportedParametersError(
            "condition checks need exactly one exponent per cell"
        )
    nc, nv = E.shape
    if (nc, girth) in SUPPORTED:
        violations = _direct_violations(E, girth)
    else:
        size = min((girth - 2) // 2, nc)
        if nc > 4 and size <= 4 and (size, girth) in SUPPORTED:
            violations = []
            for comb in combinations(range(nc), size):
                sub = E.submatrix(comb)
                for name, value, labels in _direct_violations(sub, girth):
                    violations.append(
                        (f"rows{comb}:{name}", value, labels)
                    )
        else:
            raise UnsupportedParametersError(
                f"no girth-{girth} condition set for {nc} rows"
            )
    passed = not violations
    return GirthReport(
        girth=girth if passed else None,
        method=METHOD_CONDITIONS,
        checked_up_to=girth,
        passed=passed,
        witnesses=tuple(violations),
    )


# ---------------------------------------------------------------------------
# Cycle sums


@dataclass(frozen=True)
class CycleSumSet:
    """Alternating exponent sums of the closed walks of one length.

    Each entry pairs the sum with its generating walk, a tuple of
    (row, col, exponent) edges traversed alternately away from and back to
    the row side (signs +, -, +, -, ...).  A lift of size N contains a
    cycle of this length exactly when some sum is divisible by N.
    """

    length: int
    sums: tuple


def cycle_sums(E: ExponentMatrix, length: int) -> CycleSumSet:
    """Enumerate closed non-backtracking walks of `length` edges.

    Walks live on the block support: consecutive steps must use different
    edges, so two parallel edges of one multi-exponent cell may follow each
    other (length 2 enumerates exactly those parallel pairs).  Walks are
    deduplicated up to rotation and reflection.
    """
    if length < 2 or length % 2:
        raise ValueError(f"walk length must be even and positive, got {length}")
    edges = list(E.edges())
    by_row: dict[int, list[int]] = {}
    by_col: dict[int, list[int]] = {}
    for idx, (r, c, _) in enumerate(edges):
        by_row.setdefault(r, []).append(idx)
        by_col.setdefault(c, []).append(idx)

    found: dict[tuple, tuple] = {}

    def canonical(path: tuple) -> tuple:
        rev = path[::-1]
        options = [path[s:] + path[:s] for s in range(0, length, 2)]
        options += [rev[s:] + rev[:s] for s in range(0, length, 2)]
        return min(options)

    def rec(path: list, at_col: bool, node: int, start: int) -> None:
        depth = len(path)
        if depth == length:
            key = canonical(tuple(path))
            if key not in found:
                total = 0
                for pos, eid in enumerate(key):
                    exp = edges[eid][2]
                    total += exp if pos % 2 == 0 else -exp
                walk = tuple(edges[eid] for eid in key)
                found[key] = (total, walk)
            return
        pool = by_col[node] if at_col else by_row.get(node, [])
        last = path[-1]
        closing = depth == length - 1
        for eid in pool:
            if eid == last or eid < start:
                continue
            r, c, _ = edges[eid]
            if closing:
                if r == edges[start][0] and eid != start:
                    path.append(eid)
                    rec(path, False, r, start)
                    path.pop()
            else:
                path.append(eid)
                nxt_col = not at_col
                rec(path, nxt_col, c if nxt_col else r, start)
                path.pop()

    for start in range(len(edges)):
        r, c, _ = edges[start]
        rec([start], True, c, start)

    ordered = sorted(found.values())
    return CycleSumSet(length, tuple(ordered))


def cycle_sum_girth(E: ExponentMatrix, max_length: int) -> GirthReport:
    """Smallest walk length whose sums vanish, as a girth report.

    For a bound matrix a sum counts as vanishing when divisible by the lift
    size; for an unbound matrix only a literal zero vanishes (meaning no
    lift size can avoid that cycle).
    """
    for length in range(2, max_length + 1, 2):
        css = cycle_sums(E, length)
        for total, walk in css.sums:
            folded = total % E.n if E.n else total
            if folded == 0:
                return GirthReport(
                    length,
                    METHOD_CYCLE_SUMS,
                    witnesses=((total, walk),),
                )
    return GirthReport(None, METHOD_CYCLE_SUMS, checked_up_to=max_length)
