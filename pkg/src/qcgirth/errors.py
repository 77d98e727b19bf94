"""Exception types shared across the package."""

from __future__ import annotations


class QcGirthError(Exception):
    """Base class for all package-specific errors."""


class BindCollisionError(QcGirthError):
    """Two exponents of one cell coincide modulo the requested lift size."""

    def __init__(self, row: int, col: int, n: int, exponents) -> None:
        self.row = row
        self.col = col
        self.n = n
        self.exponents = tuple(exponents)
        super().__init__(
            f"cell ({row}, {col}): exponents {self.exponents} collide modulo {n}"
        )


class MultiEdgeError(QcGirthError):
    """An operation that needs a 0/1 lift received a cell of weight >= 2."""


class UnsupportedParametersError(QcGirthError):
    """The requested (rows, girth) combination has no implemented criterion."""


class ConstructionError(QcGirthError):
    """Exponent selection ran out of candidates within the safety cap."""


class FormatError(QcGirthError):
    """A text file does not follow the expected format."""
