"""Exponent matrices: the bookkeeping form of a quasi-cyclic matrix.

An exponent matrix stores, for every block cell, the set of shift exponents
whose circulant permutations add up to that cell (or no set at all for a
structurally zero cell).  It exists in two flavours:

* unbound (``n is None``): exponents are plain integers, the form in which
  construction algorithms and over-the-integers girth conditions work;
* bound (``n = N``): exponents live in [0, N) and the matrix expands to an
  actual parity-check matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .circulant import BlockMatrix, CircPoly, expand as _expand_block
from .errors import BindCollisionError

Cell = "tuple[int, ...] | None"


def _normalize_cell(value, n: int | None, row: int, col: int):
    if value is None:
        return None
    if isinstance(value, (int, np.integer)):
        value = (int(value),)
    exps = [int(e) for e in value]
    if not exps:
        return None
    if n is not None:
        exps = [e % n for e in exps]
    exps.sort()
    for a, b in zip(exps, exps[1:]):
        if a == b:
            if n is None:
                raise ValueError(f"cell ({row}, {col}) repeats exponent {a}")
            raise BindCollisionError(row, col, n, exps)
    return tuple(exps)


@dataclass(frozen=True)
class ExponentMatrix:
    """Grid of exponent sets, optionally bound to a circulant size.

    Attributes
    ----------
    rows:
        Tuple of row tuples; each cell is either None (zero block) or a
        strictly increasing tuple of exponents.
    n:
        Circulant size, or None for an unbound matrix.
    prelift_n1:
        Set on matrices that arose by splitting circulants of a coarser
        matrix; purely informational and preserved by cell edits.
    """

    rows: tuple
    n: int | None = None
    prelift_n1: int | None = None

    @classmethod
    def from_rows(cls, data, n: int | None = None, prelift_n1: int | None = None):
        rows = []
        width = None
        for i, raw in enumerate(data):
            row = tuple(
                _normalize_cell(v, n, i, j) for j, v in enumerate(raw)
            )
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise ValueError("ragged exponent matrix")
            rows.append(row)
        if not rows or width == 0:
            raise ValueError("exponent matrix needs at least one cell")
        return cls(tuple(rows), n, prelift_n1)

    # -- inspection ------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]))

    @property
    def bound(self) -> bool:
        return self.n is not None

    def cell(self, i: int, j: int):
        return self.rows[i][j]

    def is_all_single(self) -> bool:
        """True when every cell holds exactly one exponent (no zero cells)."""
        return all(c is not None and len(c) == 1 for row in self.rows for c in row)

    def support(self) -> np.ndarray:
        r, c = self.shape
        out = np.zeros((r, c), dtype=bool)
        for i in range(r):
            for j in range(c):
                out[i, j] = self.rows[i][j] is not None
        return out

    def edges(self):
        """All (row, col, exponent) triples of the support."""
        for i, row in enumerate(self.rows):
            for j, cell in enumerate(row):
                if cell is None:
                    continue
                for e in cell:
                    yield (i, j, e)

    # -- derivation ------------------------------------------------------

    def bind(self, n: int) -> "ExponentMatrix":
        """Reduce every exponent modulo n; collisions inside a cell raise."""
        if n < 1:
            raise ValueError(f"lift size must be positive, got {n}")
        return ExponentMatrix.from_rows(self.rows, n, self.prelift_n1)

    def unbound(self) -> "ExponentMatrix":
        return ExponentMatrix.from_rows(self.rows, None, self.prelift_n1)

    def with_cell(self, i: int, j: int, value) -> "ExponentMatrix":
        cell = _normalize_cell(value, self.n, i, j)
        rows = list(map(list, self.rows))
        rows[i][j] = cell
        return replace(self, rows=tuple(tuple(r) for r in rows))

    def mask(self, i: int, j: int) -> "ExponentMatrix":
        return self.with_cell(i, j, None)

    def submatrix(self, row_idx, col_idx=None) -> "ExponentMatrix":
        r, c = self.shape
        cols = list(range(c)) if col_idx is None else list(col_idx)
        rows = tuple(
            tuple(self.rows[i][j] for j in cols) for i in row_idx
        )
        return replace(self, rows=rows)

    def to_block(self) -> BlockMatrix:
        if self.n is None:
            raise ValueError("bind the matrix before building its blocks")
        n = self.n
        cells = [
            [
                CircPoly.from_exponents(n, cell) if cell else CircPoly.zero(n)
                for cell in row
            ]
            for row in self.rows
        ]
        return BlockMatrix(n, cells)

    def expand(self) -> np.ndarray:
        return _expand_block(self.to_block())
