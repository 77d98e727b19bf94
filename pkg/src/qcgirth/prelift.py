"""Two-step lifting: equivalence views, pattern scans, and girth repair.

A circulant lift of size N = N1*N2 can always be re-read as a lift in two
stages: an N1-scale permutation pattern per protograph cell, then
N2-circulants on that pattern's nonzeros.  Rewriting a matrix into this
shape (a "view") is a pure relabeling of rows and columns, so the Tanner
graph is unchanged, but the view exposes N1-scale structure that caps the
achievable girth.  Girth beyond 12 is reached by editing view exponents so
that the capping patterns disappear, which is what the scan and repair
helpers below support.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .circulant import CircPoly
from .errors import UnsupportedParametersError
from .exponents import ExponentMatrix
from .oracle import girth_bfs_oracle

__all__ = [
    "PreliftView",
    "StructureScan",
    "PreliftGuarantee",
    "RepairResult",
    "STRUCTURE_PATTERNS",
    "poly_prelift",
    "matrix_prelift",
    "scan_structures",
    "prelift_admits_girth",
    "find_blocking_entry",
    "repair_girth",
]


def poly_prelift(g: CircPoly, n1: int) -> list[list[CircPoly]]:
    """Split a polynomial over N = n1*n2 into an n1 x n1 grid over n2.

    A term x^e with e = m + n1*q lands in every grid cell (r, c) with
    r - c = m (mod n1), carrying exponent q, plus one extra shift when the
    cell sits above the diagonal.  A monomial therefore becomes an n1-scale
    permutation pattern and total coefficient weight is preserved.
    """
    if n1 < 1:
        raise ValueError(f"pre-lift factor must be positive, got {n1}")
    if g.n % n1:
        raise ValueError(f"pre-lift factor {n1} does not divide {g.n}")
    n2 = g.n // n1
    grid = [[CircPoly.zero(n2) for _ in range(n1)] for _ in range(n1)]
    for e, coeff in g.terms():
        m, q = e % n1, e // n1
        for r in range(n1):
            c = (r - m) % n1
            shift = (q + (1 if r < c else 0)) % n2
            grid[r][c] = grid[r][c] + CircPoly.monomial(n2, shift, coeff)
    return grid


def _inblock_perm(n: int, n1: int) -> np.ndarray:
    """Index map sending position p of an N-block to its view position."""
    p = np.arange(n, dtype=np.int64)
    n2 = n // n1
    return ((-p) % n1) * n2 + (((p + n1 - 1) // n1) % n2)


@dataclass(frozen=True, eq=False)
class PreliftView:
    """A matrix rewritten over circulants of size n2 = N / n1.

    ``matrix`` is the view itself: shape (n_c*n1) x (n_v*n1), bound to n2.
    ``row_perm`` and ``col_perm`` map expanded indices of the original onto
    expanded indices of the view, so that

        expand(original) == expand(view)[np.ix_(row_perm, col_perm)]

    holds entrywise.  Being permutations of the same graph, original and
    view always have equal girth.
    """

    n1: int
    n2: int
    matrix: ExponentMatrix
    row_perm: np.ndarray
    col_perm: np.ndarray

    @property
    def row_perm_inv(self) -> np.ndarray:
        return np.argsort(self.row_perm)

    @property
    def col_perm_inv(self) -> np.ndarray:
        return np.argsort(self.col_perm)


def matrix_prelift(E: ExponentMatrix, n1: int) -> PreliftView:
    """Rewrite a bound matrix as an equivalent view with pre-lift factor n1.

    n1 = 1 returns the matrix unchanged (modulo the trivial permutation).
    The view's blocks collect the split of every cell exponent; distinct
    exponents of one cell never collide after the split.
    """
    if not E.bound:
        raise ValueError("pre-lifting needs a bound matrix")
    if n1 < 1:
        raise ValueError(f"pre-lift factor must be positive, got {n1}")
    if E.n % n1:
        raise ValueError(f"pre-lift factor {n1} does not divide N={E.n}")
    n2 = E.n // n1
    n_c, n_v = E.shape
    cells: dict[tuple[int, int], list[int]] = {}
    for bi, bj, e in E.edges():
        m, q = e % n1, e // n1
        for r in range(n1):
            c = (r - m) % n1
            shift = (q + (1 if r < c else 0)) % n2
            cells.setdefault((bi * n1 + r, bj * n1 + c), []).append(shift)
    rows = [
        [cells.get((i, j)) for j in range(n_v * n1)] for i in range(n_c * n1)
    ]
    view = ExponentMatrix.from_rows(rows, n=n2, prelift_n1=n1)
    pi = _inblock_perm(E.n, n1)
    row_perm = np.concatenate([b * E.n + pi for b in range(n_c)])
    col_perm = np.concatenate([b * E.n + pi for b in range(n_v)])
    return PreliftView(n1, n2, view, row_perm, col_perm)


# ---------------------------------------------------------------------------
# Pattern-scale structure scans

#: Canonical layouts of the girth-capping patterns.  Witness index tuples
#: returned by scan_structures extract these exact layouts, no row or
#: column permutation needed.
STRUCTURE_PATTERNS = {
    "2x2": np.ones((2, 2), dtype=bool),
    "2x3": np.ones((2, 3), dtype=bool),
    "3x3-fork": np.array([[1, 1, 1], [1, 1, 0], [1, 0, 1]], dtype=bool),
    "3x4-split": np.array(
        [[1, 1, 1, 1], [1, 1, 0, 0], [0, 0, 1, 1]], dtype=bool
    ),
    "3x4-chain": np.array(
        [[1, 1, 1, 0], [1, 1, 0, 1], [0, 0, 1, 1]], dtype=bool
    ),
}


@dataclass(frozen=True)
class StructureScan:
    """Occurrence counts of the girth-capping patterns in a 0/1 matrix.

    counts
        Exact number of occurrences per pattern name, each counted up to
        row and column permutation.
    found
        Capped list of (name, rows, cols) witnesses; extracting those
        indices yields STRUCTURE_PATTERNS[name] exactly.
    """

    counts: dict
    found: tuple
    witness_cap: int

    def clean_for(self, girth: int) -> bool:
        """No pattern that rules out the given target girth is present.

        A 2x2 all-one pattern (pattern-scale 4-cycle) caps the girth of any
        lift at 18; the remaining patterns tighten that to 12 (2x3), 14
        (fork) and 16/18 (split, chain).  Targets of 20 and above need a
        scan with zero findings everywhere.
        """
        if girth <= 12:
            return self.counts["2x3"] == 0
        if girth == 14:
            return self.counts["2x3"] == 0 and self.counts["3x3-fork"] == 0
        if girth <= 18:
            return sum(self.counts[k] for k in self.counts if k != "2x2") == 0
        return sum(self.counts.values()) == 0


def _pattern_of(P) -> np.ndarray:
    if isinstance(P, ExponentMatrix):
        return P.support()
    B = np.asarray(P)
    if B.ndim != 2:
        raise ValueError("expected a 2-D pattern matrix")
    return B != 0


def scan_structures(P, witness_cap: int = 8) -> StructureScan:
    """Count girth-capping substructures of a pattern matrix.

    P is a pre-lift support pattern (ExponentMatrix or anything array-like;
    nonzero means edge).  Enumeration is brute force over row pairs and
    triples, which is fine at pattern scale.
    """
    B = _pattern_of(P)
    R, C = B.shape
    counts = {name: 0 for name in STRUCTURE_PATTERNS}
    exemplars = {name: [] for name in STRUCTURE_PATTERNS}

    def witness(name, rows, cols):
        if len(exemplars[name]) < witness_cap:
            exemplars[name].append((tuple(int(r) for r in rows),
                                    tuple(int(c) for c in cols)))

    for pair in combinations(range(R), 2):
        common = np.flatnonzero(B[pair[0]] & B[pair[1]])
        counts["2x2"] += comb(len(common), 2)
        counts["2x3"] += comb(len(common), 3)
        if len(common) >= 2:
            witness("2x2", pair, common[:2])
        if len(common) >= 3:
            witness("2x3", pair, common[:3])

    for tri in combinations(range(R), 3):
        sub = B[list(tri)]
        masks = sub[0].astype(int) + 2 * sub[1] + 4 * sub[2]
        by_mask = {m: np.flatnonzero(masks == m) for m in range(1, 8)}
        n = {m: len(by_mask[m]) for m in by_mask}
        # fork: a full column plus two weight-2 columns sharing one row
        for s in range(3):
            o1, o2 = (u for u in range(3) if u != s)
            m1 = (1 << s) | (1 << o1)
            m2 = (1 << s) | (1 << o2)
            counts["3x3-fork"] += n[7] * n[m1] * n[m2]
            if n[7] and n[m1] and n[m2]:
                witness(
                    "3x3-fork",
                    (tri[s], tri[o1], tri[o2]),
                    (by_mask[7][0], by_mask[m1][0], by_mask[m2][0]),
                )
        # split: full row r plus two disjoint doubled column patterns
        for r in range(3):
            s, t = (u for u in range(3) if u != r)
            m_rs = (1 << r) | (1 << s)
            m_rt = (1 << r) | (1 << t)
            counts["3x4-split"] += comb(n[m_rs], 2) * comb(n[m_rt], 2)
            if n[m_rs] >= 2 and n[m_rt] >= 2:
                witness(
                    "3x4-split",
                    (tri[r], tri[s], tri[t]),
                    tuple(by_mask[m_rs][:2]) + tuple(by_mask[m_rt][:2]),
                )
        # chain: doubled pattern on rows {a, b}, single links to row c
        for a, b in combinations(range(3), 2):
            c = 3 - a - b
            m_ab = (1 << a) | (1 << b)
            m_ac = (1 << a) | (1 << c)
            m_bc = (1 << b) | (1 << c)
            counts["3x4-chain"] += comb(n[m_ab], 2) * n[m_ac] * n[m_bc]
            if n[m_ab] >= 2 and n[m_ac] and n[m_bc]:
                witness(
                    "3x4-chain",
                    (tri[a], tri[b], tri[c]),
                    tuple(by_mask[m_ab][:2]) + (by_mask[m_ac][0], by_mask[m_bc][0]),
                )
    found = tuple(
        (name, rows, cols)
        for name in STRUCTURE_PATTERNS
        for rows, cols in exemplars[name]
    )
    return StructureScan(counts, found, witness_cap)


# ---------------------------------------------------------------------------
# Sufficient pattern-girth guarantees

_GUARANTEE_FLOOR = {14: 6, 16: 6, 18: 6, 20: 8, 22: 8}


@dataclass(frozen=True)
class PreliftGuarantee:
    """Outcome of the sufficient pattern-girth test.

    A pattern of girth 6 guarantees lifts of girth 14, 16 or 18 exist; a
    pattern of girth 8 extends that to 20 and 22.  The test is sufficient
    only: ``guaranteed`` False means no guarantee, not impossibility.
    """

    target: int
    pattern_girth: int | None
    guaranteed: bool
    note: str

    def __bool__(self) -> bool:
        return self.guaranteed


def prelift_admits_girth(B, target: int) -> PreliftGuarantee:
    """Check the sufficient condition for reaching ``target`` from pattern B.

    B is the pre-lift pattern (ExponentMatrix or 0/1 array).  Its own
    Tanner girth is measured by the graph oracle.
    """
    if target not in _GUARANTEE_FLOOR:
        raise UnsupportedParametersError(
            f"guarantees cover girth 14 to 22, got {target}"
        )
    floor = _GUARANTEE_FLOOR[target]
    pattern = _pattern_of(B).astype(np.int64)
    g = girth_bfs_oracle(pattern, witness=False).girth
    ok = g is None or g >= floor
    if ok:
        note = f"pattern girth {'acyclic' if g is None else g} >= {floor}"
    else:
        note = f"NotGuaranteed: pattern girth {g} below {floor}"
    return PreliftGuarantee(target, g, ok, note)


# ---------------------------------------------------------------------------
# Blocking cells and greedy repair


def _measured_girth(E: ExponentMatrix) -> int | None:
    return girth_bfs_oracle(E.expand(), witness=False).girth


def _exceeds(girth: int | None, base: int) -> bool:
    return girth is None or girth > base


def find_blocking_entry(
    E: ExponentMatrix, current_girth: int | None = None
) -> list[tuple[int, int]]:
    """Cells whose masking raises the oracle girth above the current one.

    Every shortest cycle passes through each reported cell, so re-selecting
    such a cell's exponent is the only single-cell edit that can improve
    the girth.  An empty list means the girth is held down by more than one
    disjoint cycle.
    """
    if not E.bound:
        raise ValueError("masking probes need a bound matrix")
    base = current_girth if current_girth is not None else _measured_girth(E)
    if base is None:
        return []
    out = []
    for i, j in np.argwhere(E.support()):
        if _exceeds(_measured_girth(E.mask(int(i), int(j))), base):
            out.append((int(i), int(j)))
    return out


@dataclass(frozen=True)
class RepairResult:
    """Result of a greedy girth repair.

    ``matrix`` is the best matrix reached (the input itself when nothing
    helped), ``girth`` its oracle girth (None for acyclic), ``succeeded``
    whether the target was met, ``evaluations`` how many oracle calls were
    spent, and ``changed`` the (row, col, exponent) edits applied.
    """

    matrix: ExponentMatrix
    girth: int | None
    succeeded: bool
    evaluations: int
    changed: tuple


def repair_girth(
    E: ExponentMatrix,
    target: int,
    *,
    budget: int = 2000,
    seed: int | None = None,
    grow: tuple[int, ...] = (),
) -> RepairResult:
    """Greedily re-select single exponents until the oracle girth reaches
    ``target``.

    Each round finds the blocking cells, then scans replacement exponents
    in ascending order and keeps the first strict improvement.  With a seed
    the blocking cells are visited in a seeded random order instead of
    row-major order; the outcome is still deterministic per seed.  ``grow``
    lists larger circulant sizes to rebind to when no single-cell edit
    helps at the current size.  ``budget`` caps the total number of oracle
    evaluations (masking probes included).  The result never has girth
    below the input's.
    """
    if not E.bound:
        raise ValueError("repair needs a bound matrix")
    if target < 4 or target % 2:
        raise ValueError(f"target girth must be an even value >= 4, got {target}")
    rng = np.random.default_rng(seed) if seed is not None else None
    evals = 0
    changed: list[tuple[int, int, int]] = []

    def measure(mat: ExponentMatrix) -> int | None:
        nonlocal evals
        evals += 1
        return _measured_girth(mat)

    current = E
    g_now = measure(current)
    best = (current, g_now, ())
    sizes = [n for n in sorted(set(grow)) if n > E.n]

    def keep_best():
        nonlocal best
        g_best = best[1]
        if g_best is not None and _exceeds(g_now, g_best):
            best = (current, g_now, tuple(changed))

    while True:
        if g_now is None or g_now >= target:
            return RepairResult(current, g_now, True, evals, tuple(changed))
        if evals >= budget:
            break
        base = g_now
        support = [tuple(map(int, rc)) for rc in np.argwhere(current.support())]
        blocking = []
        for i, j in support:
            if evals >= budget:
                break
            if _exceeds(measure(current.mask(i, j)), base):
                blocking.append((i, j))
        order = blocking if blocking else support
        if rng is not None:
            order = [order[k] for k in rng.permutation(len(order))]
        improved = False
        for i, j in order:
            old = current.cell(i, j)
            for cand in range(current.n):
                if old == (cand,):
                    continue
                if evals >= budget:
                    break
                trial = current.with_cell(i, j, cand)
                g_t = measure(trial)
                if _exceeds(g_t, base):
                    current, g_now = trial, g_t
                    changed.append((i, j, cand))
                    keep_best()
                    improved = True
                    break
            if improved or evals >= budget:
                break
        if improved:
            continue
        if sizes and evals < budget:
            current = current.unbound().bind(sizes.pop(0))
            g_now = measure(current)
            keep_best()
            continue
        break
    mat, g_best, edits = best
    return RepairResult(mat, g_best, False, evals, edits)
