"""Reduced form and girth-6 conditions for the doubled-diagonal 4 x 8 family.

The family covers parity-check protographs whose left half carries 1 + x^e
cells on the diagonal (a doubled edge per check) and whose right half has
one structural zero per row. Everything here works on the exponent level;
the generic block-algebra route stays available through
:func:`qcgirth.girth.overlap_matrix` and is used to cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circulant import BlockMatrix, CircPoly
from .exponents import ExponentMatrix
from .report import METHOD_CONDITIONS, GirthReport

__all__ = [
    "CcsdsForm",
    "CCSDS_128_64",
    "ccsds_to_exponent_matrix",
    "ccsds_CH",
    "ccsds_girth6_check",
]

_LETTERS = "abcd"


@dataclass(frozen=True)
class CcsdsForm:
    """Exponent rows of the reduced doubled-diagonal 4 x 8 protograph.

    Each of ``a`` through ``d`` lists the eight cell exponents of one
    check row. Cell (i, i) of the left half holds 1 + x^e so its entry
    here is the doubled exponent e. One right-half cell per row is a
    structural zero and must be None: column 5 for ``a``, 6 for ``b``,
    7 for ``c``, 8 for ``d`` (1-based). The reduced normalization pins
    a_8 = b_5 = c_6 = d_7 = 0.
    """

    a: tuple
    b: tuple
    c: tuple
    d: tuple
    n: int

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError("circulant size must be positive")
        for i, row in enumerate(self.rows):
            if len(row) != 8:
                raise ValueError(f"row {_LETTERS[i]} needs 8 entries")
            absent = 4 + i
            pinned = 4 + (i + 3) % 4
            for j, e in enumerate(row):
                if j == absent:
                    if e is not None:
                        raise ValueError(
                            f"{_LETTERS[i]}_{j + 1} is a structural zero"
                        )
                elif not isinstance(e, int):
                    raise ValueError(f"{_LETTERS[i]}_{j + 1} must be an integer")
                elif j == pinned and e % self.n:
                    raise ValueError(
                        f"reduced form pins {_LETTERS[i]}_{j + 1} to 0"
                    )

    @property
    def rows(self):
        return (self.a, self.b, self.c, self.d)


#: The (128, 64) standard code protograph in reduced form, circulant size 16.
CCSDS_128_64 = CcsdsForm(
    a=(7, 2, 14, 6, None, 0, 13, 0),
    b=(6, 15, 0, 1, 0, None, 0, 7),
    c=(4, 1, 15, 14, 11, 0, None, 3),
    d=(0, 1, 9, 13, 14, 1, 0, None),
    n=16,
)


def ccsds_to_exponent_matrix(m: CcsdsForm) -> ExponentMatrix:
    """The 4 x 8 exponent grid of the form, bound at its circulant size."""
    rows = []
    for i, row in enumerate(m.rows):
        cells = []
        for j, e in enumerate(row):
            if e is None:
                cells.append(None)
            elif j == i:
                cells.append((0, e))
            else:
                cells.append((e,))
        rows.append(cells)
    return ExponentMatrix.from_rows(rows, n=m.n)


def ccsds_CH(m: CcsdsForm) -> BlockMatrix:
    """Overlap matrix of the form, assembled from the closed formulas.

    Diagonal cells are x^e + x^-e for the doubled exponents; cell (i, k)
    pools the two bare terms contributed by the doubled cells with the
    rowwise differences, skipping the two columns where either row has
    its structural zero.
    """
    n = m.n
    rows = m.rows
    cells = [[None] * 4 for _ in range(4)]
    for i in range(4):
        t = rows[i][i]
        cells[i][i] = CircPoly.from_exponents(n, [t % n, (-t) % n])
    for i in range(4):
        for k in range(i + 1, 4):
            u, v = rows[i], rows[k]
            skip = (4 + i, 4 + k)
            exps = [-v[i], u[k]]
            exps += [u[j] - v[j] for j in range(8) if j not in skip]
            poly = CircPoly.from_exponents(n, [e % n for e in exps])
            cells[i][k] = poly
            cells[k][i] = poly.transpose()
    return BlockMatrix(n, cells)


def _pooled_set(m: CcsdsForm, i: int, k: int):
    """Labeled exponents whose residues must stay distinct for pair (i, k)."""
    u, v = m.rows[i], m.rows[k]
    li, lk = _LETTERS[i], _LETTERS[k]
    items = [
        (f"-{lk}{i + 1}", -v[i]),
        (f"{li}{k + 1}", u[k]),
    ]
    skip = (4 + i, 4 + k)
    for j in range(8):
        if j not in skip:
            items.append((f"{li}{j + 1}-{lk}{j + 1}", u[j] - v[j]))
    return items


def ccsds_girth6_check(m: CcsdsForm) -> GirthReport:
    """Girth-6 certification on the exponent level.

    Passes when none of the doubled exponents vanishes when doubled and
    each of the six pooled pair sets has all residues distinct mod N.
    Equivalent to the expanded matrix having girth over 4.
    """
    n = m.n
    violations = []
    for i in range(4):
        e = m.rows[i][i]
        if (2 * e) % n == 0:
            violations.append((f"2{_LETTERS[i]}{i + 1}", 0, (e, e)))
    for i in range(4):
        for k in range(i + 1, 4):
            seen = {}
            for label, e in _pooled_set(m, i, k):
                r = e % n
                if r in seen:
                    violations.append(
                        (f"pool {_LETTERS[i]}{_LETTERS[k]}", r, (seen[r], label))
                    )
                else:
                    seen[r] = label
    passed = not violations
    return GirthReport(
        girth=6 if passed else None,
        method=METHOD_CONDITIONS,
        checked_up_to=6,
        passed=passed,
        witnesses=tuple(violations),
    )
