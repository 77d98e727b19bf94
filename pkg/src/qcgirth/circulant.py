"""Arithmetic in the circulant ring Z[x]/(x^N - 1) and block matrices over it.

A circulant lift replaces every monomial x^r by the N x N permutation matrix
with a one in row k, column (k + r) mod N.  Sums of monomials lift to sums of
permutation matrices, so a polynomial with 0/1 coefficients describes one
block of a quasi-cyclic parity-check matrix, and polynomial products track
walks through consecutive blocks.

`CircPoly` and `BlockMatrix` are immutable: every operation returns a fresh
object and no method mutates its receiver.
"""

from __future__ import annotations

import numpy as np

from .errors import MultiEdgeError

# Products fold over a dense numpy coefficient vector up to this modulus and
# fall back to exponent-dict accumulation above it (or when int64 could
# overflow).  Tests force both paths onto the same inputs.
DENSE_LIMIT = 4096
_FORCE_MUL: str | None = None  # test hook: "dense" or "sparse"
_INT64_GUARD = 1 << 61


class CircPoly:
    """Polynomial with integer coefficients, reduced modulo x^n - 1.

    Parameters
    ----------
    n:
        Circulant size, at least 1.  Exponents are stored canonically in
        [0, n).
    pairs:
        Iterable of (exponent, coefficient); repeated exponents accumulate.
    """

    __slots__ = ("n", "_c")

    def __init__(self, n: int, pairs=()) -> None:
        if n < 1:
            raise ValueError(f"circulant size must be positive, got {n}")
        acc: dict[int, int] = {}
        for exp, coeff in pairs:
            if coeff == 0:
                continue
            e = exp % n
            v = acc.get(e, 0) + coeff
            if v:
                acc[e] = v
            else:
                del acc[e]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_c", acc)

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("CircPoly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "CircPoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "CircPoly":
        return cls(n, ((0, 1),))

    @classmethod
    def monomial(cls, n: int, exp: int, coeff: int = 1) -> "CircPoly":
        return cls(n, ((exp, coeff),))

    @classmethod
    def from_exponents(cls, n: int, exponents) -> "CircPoly":
        """0/1-style polynomial: one unit per listed exponent."""
        return cls(n, ((e, 1) for e in exponents))

    @classmethod
    def from_coeffs(cls, n: int, coeffs) -> "CircPoly":
        return cls(n, ((e, int(c)) for e, c in enumerate(coeffs)))

    # -- inspection ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def weight(self) -> int:
        """Sum of coefficients (the per-row count of ones in the lift)."""
        return sum(self._c.values())

    @property
    def max_coeff(self) -> int:
        return max(self._c.values(), default=0)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._c))

    def coeff(self, exp: int) -> int:
        return self._c.get(exp % self.n, 0)

    def terms(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._c.items()))

    def to_dense(self) -> np.ndarray:
        out = np.zeros(self.n, dtype=np.int64)
        for e, c in self._c.items():
            out[e] = c
        return out

    # -- ring operations -------------------------------------------------

    def _require_same_n(self, other: "CircPoly") -> None:
        if self.n != other.n:
            raise ValueError(f"mixed circulant sizes {self.n} and {other.n}")

    def __add__(self, other: "CircPoly") -> "CircPoly":
        self._require_same_n(other)
        pairs = list(self._c.items()) + list(other._c.items())
        return CircPoly(self.n, pairs)

    def __sub__(self, other: "CircPoly") -> "CircPoly":
        self._require_same_n(other)
        pairs = list(self._c.items()) + [(e, -c) for e, c in other._c.items()]
        return CircPoly(self.n, pairs)

    def __mul__(self, other: "CircPoly") -> "CircPoly":
        self._require_same_n(other)
        if self.is_zero or other.is_zero:
            return CircPoly(self.n)
        mode = _FORCE_MUL
        if mode is None:
            mode = "dense" if self.n <= DENSE_LIMIT else "sparse"
        if mode == "dense" and self._dense_safe(other):
            return self._mul_dense(other)
        return self._mul_sparse(other)

    def _dense_safe(self, other: "CircPoly") -> bool:
        bound = max(abs(c) for c in self._c.values())
        bound *= max(abs(c) for c in other._c.values())
        bound *= min(len(self._c), len(other._c))
        return bound < _INT64_GUARD

    def _mul_dense(self, other: "CircPoly") -> "CircPoly":
        conv = np.convolve(self.to_dense(), other.to_dense())
        folded = conv[: self.n].copy()
        if conv.shape[0] > self.n:
            folded[: conv.shape[0] - self.n] += conv[self.n :]
        return CircPoly.from_coeffs(self.n, folded)

    def _mul_sparse(self, other: "CircPoly") -> "CircPoly":
        n = self.n
        acc: dict[int, int] = {}
        for ea, ca in self._c.items():
            for eb, cb in other._c.items():
                e = ea + eb
                if e >= n:
                    e -= n
                acc[e] = acc.get(e, 0) + ca * cb
        return CircPoly(n, acc.items())

    def transpose(self) -> "CircPoly":
        """Transpose of the lift: every exponent r becomes n - r."""
        return CircPoly(self.n, ((-e, c) for e, c in self._c.items()))

    # -- protocol --------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CircPoly)
            and self.n == other.n
            and self._c == other._c
        )

    def __hash__(self) -> int:
        return hash((self.n, self.terms()))

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, c in self.terms():
            if e == 0:
                parts.append(str(c))
            else:
                mono = "x" if e == 1 else f"x^{e}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


def excess(a, b):
    """Entrywise overflow indicator.

    For polynomials: the result has a unit at exponent e exactly when the
    coefficient of e in `a` is at least 2 while `b` has no term at e; those
    are the places where walks collide without a shorter-walk explanation.
    Block matrices apply the rule cell by cell.
    """
    if isinstance(a, CircPoly):
        if not isinstance(b, CircPoly) or a.n != b.n:
            raise ValueError("excess needs two polynomials of one modulus")
        hits = [(e, 1) for e, c in a.terms() if c >= 2 and b.coeff(e) == 0]
        return CircPoly(a.n, hits)
    if isinstance(a, BlockMatrix):
        if not isinstance(b, BlockMatrix) or a.shape != b.shape or a.n != b.n:
            raise ValueError("excess needs two block matrices of one shape")
        rows = tuple(
            tuple(excess(pa, pb) for pa, pb in zip(ra, rb))
            for ra, rb in zip(a.cells, b.cells)
        )
        return BlockMatrix(a.n, rows)
    A, B = np.asarray(a), np.asarray(b)
    if A.shape != B.shape:
        raise ValueError("excess needs two arrays of one shape")
    return ((A >= 2) & (B == 0)).astype(np.int64)


class BlockMatrix:
    """Immutable grid of CircPoly cells sharing one circulant size."""

    __slots__ = ("n", "cells")

    def __init__(self, n: int, cells) -> None:
        rows = tuple(tuple(row) for row in cells)
        if not rows or not rows[0]:
            raise ValueError("block matrix needs at least one cell")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise ValueError("ragged block matrix")
            for cell in row:
                if not isinstance(cell, CircPoly) or cell.n != n:
                    raise ValueError("every cell must be a CircPoly over n")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "cells", rows)

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("BlockMatrix is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, n: int, rows: int, cols: int) -> "BlockMatrix":
        z = CircPoly.zero(n)
        return cls(n, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int, size: int) -> "BlockMatrix":
        one = CircPoly.one(n)
        z = CircPoly.zero(n)
        return cls(n, [[one if i == j else z for j in range(size)] for i in range(size)])

    # -- inspection ------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.cells), len(self.cells[0]))

    def cell(self, i: int, j: int) -> CircPoly:
        return self.cells[i][j]

    def row_weights(self) -> tuple[int, ...]:
        """Coefficient sum per block row = weight of every fine row in it."""
        return tuple(sum(c.weight for c in row) for row in self.cells)

    def max_coeff(self) -> int:
        return max((c.max_coeff for row in self.cells for c in row), default=0)

    def is_zero(self) -> bool:
        return all(c.is_zero for row in self.cells for c in row)

    # -- algebra ---------------------------------------------------------

    def __add__(self, other: "BlockMatrix") -> "BlockMatrix":
        if self.shape != other.shape or self.n != other.n:
            raise ValueError("shape or modulus mismatch in block sum")
        rows = tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.cells, other.cells)
        )
        return BlockMatrix(self.n, rows)

    def __matmul__(self, other: "BlockMatrix") -> "BlockMatrix":
        rs, ks = self.shape
        ko, cs = other.shape
        if ks != ko or self.n != other.n:
            raise ValueError("shape or modulus mismatch in block product")
        out = []
        for i in range(rs):
            out_row = []
            for j in range(cs):
                acc = CircPoly.zero(self.n)
                for k in range(ks):
                    a = self.cells[i][k]
                    b = other.cells[k][j]
                    if a.is_zero or b.is_zero:
                        continue
                    acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return BlockMatrix(self.n, out)

    def transpose(self) -> "BlockMatrix":
        rs, cs = self.shape
        rows = tuple(
            tuple(self.cells[i][j].transpose() for i in range(rs)) for j in range(cs)
        )
        return BlockMatrix(self.n, rows)

    def scaled(self, factor: int) -> "BlockMatrix":
        rows = tuple(
            tuple(CircPoly(self.n, ((e, factor * c) for e, c in p.terms())) for p in row)
            for row in self.cells
        )
        return BlockMatrix(self.n, rows)

    # -- protocol --------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BlockMatrix)
            and self.n == other.n
            and self.cells == other.cells
        )

    def __hash__(self) -> int:
        return hash((self.n, self.cells))

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(repr(c) for c in row) for row in self.cells
        )
        r, c = self.shape
        return f"BlockMatrix({r}x{c}, n={self.n}: {body})"


def expand(obj) -> np.ndarray:
    """Integer matrix of the circulant lift.

    expand(x^r) places a one in row k, column (k + r) mod N for every k; a
    general polynomial superposes its monomials with their coefficients, and
    a block matrix lays the expanded cells out on the block grid.
    """
    if isinstance(obj, CircPoly):
        n = obj.n
        out = np.zeros((n, n), dtype=np.int64)
        rows = np.arange(n)
        for e, c in obj.terms():
            out[rows, (rows + e) % n] += c
        return out
    if isinstance(obj, BlockMatrix):
        n = obj.n
        r, c = obj.shape
        out = np.zeros((r * n, c * n), dtype=np.int64)
        rows = np.arange(n)
        for i in range(r):
            for j in range(c):
                for e, coeff in obj.cells[i][j].terms():
                    out[i * n + rows, j * n + (rows + e) % n] += coeff
        return out
    raise TypeError(f"expand does not apply to {type(obj).__name__}")


def require_binary(M: np.ndarray, what: str = "matrix") -> None:
    """Reject lifts that are not 0/1 (parallel edges need other tools)."""
    if M.size and int(M.max(initial=0)) > 1:
        r, c = np.argwhere(M > 1)[0]
        raise MultiEdgeError(
            f"{what} has an entry of {int(M[r, c])} at ({int(r)}, {int(c)}); "
            "expected a 0/1 lift"
        )
