"""Reference designs bundled for tests, demos, and regression baselines.

Every constant below is a known-good exponent matrix whose girth behaviour
at specific lift sizes has been certified with both the algebraic checker
and the graph-search oracle; the recorded sizes appear in each docstring
and are re-derived by the test suite.  Matrices are stored unbound, so
callers pick the lift size with ``.bind(n)``.

View-shaped entries (the ones with an identity border) are two-step lifts
written out over their second-stage circulant size.  Their coordinates
follow the convention of :mod:`qcgirth.prelift`: the first block row and
the first block column of every super row are identity patterns.
"""

from __future__ import annotations

from .exponents import ExponentMatrix
from .prelift import matrix_prelift

__all__ = [
    "TWO_ROW_GIRTH8",
    "TWO_ROW_GIRTH12",
    "TWO_ROW_DOUBLED",
    "FOUR_ROW_GIRTH6",
    "FOUR_ROW_GIRTH8",
    "THREE_ROW_GIRTH10",
    "THREE_ROW_GIRTH10_WIDE",
    "THREE_ROW_GIRTH12",
    "THREE_ROW_GIRTH12_WIDE",
    "GIRTH14_BASE",
    "GIRTH14_VIEW",
    "GIRTH14_ALT_BASE",
    "GIRTH14_ALT_VIEW",
    "MASKED_GIRTH14_VIEW",
    "completed_masked_view",
    "SPLIT_TRIPLE",
    "SPLIT_TRIPLE_TWO_ROW",
    "TWO_STEP_GIRTH10_VIEW",
    "g12_split_view",
    "g12_split_view_modified",
]


def _reduced(*rows) -> ExponentMatrix:
    """A matrix in reduced form: all-zero first row, rows of exponents."""
    width = len(rows[0])
    return ExponentMatrix.from_rows([[0] * width, *rows])


def _bordered_view(n1: int, width: int, body_rows: int, body: dict) -> ExponentMatrix:
    """Assemble a view grid from its non-identity cells.

    The full grid has ``n1 + body_rows`` rows and ``n1 * width`` columns:
    an identity first block row, an identity first block column per body
    super row, and the ``body`` dict (printed-grid coordinates, exponent or
    None for a masked cell) shifted in behind them.
    """
    rows = [[None] * (n1 * width) for _ in range(n1 + body_rows)]
    for b in range(width):
        for r in range(n1):
            rows[r][b * n1 + r] = 0
    for k in range(body_rows):
        rows[n1 + k][k % n1] = 0
    for (i, j), e in body.items():
        rows[n1 + i][n1 + j] = e
    return ExponentMatrix.from_rows(rows)


#: 2 x 8, girth exactly 8 from N = 8 (shifts only need to be distinct).
TWO_ROW_GIRTH8 = _reduced(range(8))

#: 2 x 8 on a Sidon row, girth 12 from N = 77.
TWO_ROW_GIRTH12 = _reduced((0, 1, 3, 7, 12, 20, 30, 44))

#: 2 x 8 by exponent doubling, girth 12 at N = 73.
TWO_ROW_DOUBLED = _reduced((0, 1, 3, 7, 15, 31, 63, 127))

#: 4 x 8 smallest-exponent output, girth 6 from N = 12.
FOUR_ROW_GIRTH6 = _reduced(
    range(8), (0, 2, 1, 5, 7, 3, 10, 4), (0, 3, 5, 1, 9, 2, 7, 11)
)

#: 4 x 8 smallest-exponent output, girth 8 from N = 55.
FOUR_ROW_GIRTH8 = _reduced(
    range(8), (0, 8, 15, 21, 26, 32, 39, 47), (0, 9, 17, 24, 30, 37, 45, 54)
)

#: 3 x 5, girth 10 from N = 158; girth 12 unreachable at every lift size.
THREE_ROW_GIRTH10 = _reduced((0, 1, 7, 12, 20), (0, 66, 106, 144, 194))

#: 3 x 8, girth 10 from N = 514.
THREE_ROW_GIRTH10_WIDE = _reduced(
    (0, 1, 3, 7, 12, 20, 30, 44), (0, 66, 461, 106, 144, 194, 274, 385)
)

#: The 3 x 5 above with one exponent re-selected (column 3): girth 12 from
#: N = 328, girth 10 from N = 222.
THREE_ROW_GIRTH12 = _reduced((0, 1, 7, 12, 20), (0, 66, 106, 244, 194))

#: 3 x 8, girth 12 at N = 1245.
THREE_ROW_GIRTH12_WIDE = _reduced(
    (0, 1, 3, 7, 12, 20, 30, 44), (0, 66, 144, 232, 336, 526, 664, 747)
)

#: 3 x 5 chosen so its 3-split pattern stays clean: girth 12 at N = 279.
GIRTH14_BASE = _reduced((0, 1, 7, 18, 44), (0, 3, 158, 136, 106))

#: 9 x 15 view derived from GIRTH14_BASE by exponent edits: girth 14 at
#: second-stage size 752 (and at 903).
GIRTH14_VIEW = _bordered_view(
    3,
    5,
    6,
    {
        (0, 2): 1, (0, 5): 3, (0, 6): 6, (0, 10): 15,
        (1, 0): 0, (1, 3): 5, (1, 7): 23, (1, 11): 19,
        (2, 1): 7, (2, 4): 11, (2, 8): 29, (2, 9): 42,
        (3, 0): 25, (3, 4): 61, (3, 8): 94, (3, 11): 153,
        (4, 1): 64, (4, 5): 180, (4, 6): 239, (4, 9): 358,
        (5, 2): 9, (5, 3): 143, (5, 7): 256, (5, 10): 474,
    },
)

#: 3 x 5 whose 5-split pattern has girth 6 (no doubled column anywhere):
#: girth 12 at N = 245.
GIRTH14_ALT_BASE = _reduced((0, 1, 7, 18, 44), (0, 32, 54, 141, 133))

#: 15 x 25 view derived from GIRTH14_ALT_BASE: girth 14 at second-stage
#: size 605.
GIRTH14_ALT_VIEW = _bordered_view(
    5,
    5,
    10,
    {
        (0, 4): 1, (0, 8): 2, (0, 12): 4, (0, 16): 9,
        (1, 0): 0, (1, 9): 2, (1, 13): 4, (1, 17): 9,
        (2, 1): 3, (2, 5): 0, (2, 14): 8, (2, 18): 1,
        (3, 2): 9, (3, 6): 13, (3, 10): 19, (3, 19): 23,
        (4, 3): 7, (4, 7): 19, (4, 11): 34, (4, 15): 44,
        (5, 3): 29, (5, 6): 40, (5, 14): 79, (5, 17): 99,
        (6, 4): 29, (6, 7): 54, (6, 10): 115, (6, 18): 135,
        (7, 0): 23, (7, 8): 73, (7, 11): 129, (7, 19): 215,
        (8, 1): 55, (8, 9): 145, (8, 12): 209, (8, 15): 313,
        (9, 2): 301, (9, 5): 356, (9, 13): 432, (9, 16): 512,
    },
)

#: 9 x 15 view with three cells masked out: the irregular design has girth
#: 14 at second-stage size 891.  Filling the masked cells back in (see
#: completed_masked_view) caps the girth at 12 again.
MASKED_GIRTH14_VIEW = _bordered_view(
    3,
    5,
    6,
    {
        (0, 2): 1, (0, 5): 3, (0, 7): 39, (0, 10): 29,
        (1, 0): 0, (1, 3): 9, (1, 8): 4, (1, 11): 59,
        (2, 1): 0, (2, 4): 17, (2, 6): 11, (2, 9): 71,
        (3, 1): 118, (3, 5): 136, (3, 8): 290, (3, 9): 353,
        (4, 2): 32, (4, 4): 479, (4, 6): None, (4, 10): None,
        (5, 0): 209, (5, 3): None, (5, 7): 800, (5, 11): -319,
    },
)

#: Exponents that restore regularity on the masked view's empty cells.  The
#: completion carries a recorded girth target of 12 at second-stage size
#: 891 but measures 10 there; the acceptance suite pins the recorded value
#: and fails on it rather than adjusting either side.
_MASK_COMPLETION = {(7, 9): 1199, (7, 13): 1239, (8, 6): -579}


def completed_masked_view() -> ExponentMatrix:
    """The masked view with its three empty cells filled back in.

    The filled matrix is (3,5)-regular but pays for it: at size 891 the
    completion only reaches girth 10 (cell (8, 6) sits on a 10-cycle),
    while the masked view reaches 14.
    """
    out = MASKED_GIRTH14_VIEW
    for (i, j), e in _MASK_COMPLETION.items():
        out = out.with_cell(i, j, e)
    return out


#: 3 x 3 two-step rewrite of the weight-3 cyclic design 1 + x^2 + x^3 with
#: two exponents re-selected: girth 8 at size 11, 10 at 31, first 12 at 41.
#: Size 7 collides the diagonal cell (0, 7). At size 31 the expansion has
#: minimum distance exactly 48 over a nullspace of dimension 5.
SPLIT_TRIPLE = ExponentMatrix.from_rows(
    [
        [(0, 1), (1,), None],
        [None, (0, 13), (2,)],
        [(1,), None, (0, 7)],
    ]
)

#: 6 x 9 two-row design over the 3 x 3 rewrite above: its girth is twice
#: SPLIT_TRIPLE's, so 16 / 20 / 24 at sizes 11 / 31 / 41 (and only 4 at
#: size 7, where the reduced diagonal turns the overlap into a double edge).
SPLIT_TRIPLE_TWO_ROW = _bordered_view(
    3,
    3,
    3,
    {
        (0, 0): 1, (0, 4): 1,
        (1, 1): 13, (1, 5): 2,
        (2, 2): 7, (2, 3): 1,
    },
)

#: 6 x 8 two-step view of a 3 x 4 design: girth 10 at second-stage size 27,
#: where its overlap matrix has girth exactly 6.
TWO_STEP_GIRTH10_VIEW = _bordered_view(
    2,
    4,
    4,
    {
        (0, 0): 1, (0, 3): 10, (0, 5): 13,
        (1, 1): 5, (1, 2): 10, (1, 4): 13,
        (2, 1): 7, (2, 2): 11, (2, 4): 2,
        (3, 0): 7, (3, 3): 11, (3, 5): 4,
    },
)


def g12_split_view(n2: int) -> ExponentMatrix:
    """The 2-split view of THREE_ROW_GIRTH12 over second-stage size n2."""
    return matrix_prelift(THREE_ROW_GIRTH12.bind(2 * n2), 2).matrix


def g12_split_view_modified(n2: int) -> ExponentMatrix:
    """The 2-split view with two cells re-selected so that not every
    2 x 2 block stays circulant: girth 10 at n2 = 123 and 12 at n2 = 164."""
    view = g12_split_view(n2)
    return view.with_cell(5, 7, 93).with_cell(5, 9, 122)
