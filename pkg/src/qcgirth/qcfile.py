"""Text formats: the qc exponent format and MacKay alist export.

The qc format is one header line followed by one line per block row.
The header is ``N n_c n_v`` for a bound matrix or ``unbound n_c n_v``
for a symbolic one, optionally extended with ``prelift N1`` when the
matrix is a restructured two-level view.  Cells are whitespace
separated; a cell is ``.`` for a structural zero or a comma separated
list of exponents.  Rendered exponent lists are strictly increasing
(canonical residues when bound, as given when unbound), so
parse(render(E)) reproduces E exactly.

The alist format is the usual plain-text interchange for sparse binary
matrices: dimensions, maximum degrees, per-column and per-row degree
lists, then 1-indexed neighbor lists, columns first.  Neighbor lists
are written sorted and unpadded.
"""

import numpy as np

from .circulant import require_binary
from .errors import FormatError
from .exponents import ExponentMatrix


def _parse_cell(token, row, col):
    if token == ".":
        return None
    try:
        return [int(t) for t in token.split(",")]
    except ValueError:
        raise FormatError(
            f"malformed cell {token!r} at block ({row}, {col})"
        ) from None


def parse_qc(text: str) -> ExponentMatrix:
    """Parse qc-format text into an exponent matrix.

    Blank lines and lines starting with ``#`` are skipped.  Binding is
    validated on load: a bound header reduces every exponent mod N and
    an intra-cell collision raises BindCollisionError.
    """
    lines = [
        ln for ln in (raw.strip() for raw in text.splitlines())
        if ln and not ln.startswith("#")
    ]
    if not lines:
        raise FormatError("empty qc input")
    head = lines[0].split()
    if len(head) == 5 and head[3] == "prelift":
        size_tok, nc_tok, nv_tok, n1_tok = head[0], head[1], head[2], head[4]
    elif len(head) == 3:
        size_tok, nc_tok, nv_tok, n1_tok = head[0], head[1], head[2], None
    else:
        raise FormatError(f"bad header {lines[0]!r}")
    try:
        n = None if size_tok == "unbound" else int(size_tok)
        n_c, n_v = int(nc_tok), int(nv_tok)
        n1 = None if n1_tok is None else int(n1_tok)
    except ValueError:
        raise FormatError(f"bad header {lines[0]!r}") from None
    if n_c <= 0 or n_v <= 0 or (n is not None and n <= 0) \
            or (n1 is not None and n1 <= 0):
        raise FormatError(f"bad header {lines[0]!r}")
    if len(lines) - 1 != n_c:
        raise FormatError(
            f"expected {n_c} block rows, found {len(lines) - 1}"
        )
    rows = []
    for i, line in enumerate(lines[1:]):
        cells = line.split()
        if len(cells) != n_v:
            raise FormatError(
                f"block row {i} has {len(cells)} cells, expected {n_v}"
            )
        rows.append([_parse_cell(tok, i, j) for j, tok in enumerate(cells)])
    try:
        return ExponentMatrix.from_rows(rows, n=n, prelift_n1=n1)
    except ValueError as exc:
        # collision in a bound cell raises BindCollisionError and is
        # deliberately left to propagate; plain ValueError here means a
        # repeated exponent in an unbound cell or a bad prelift factor.
        raise FormatError(str(exc)) from None


def render_qc(E: ExponentMatrix) -> str:
    """Render an exponent matrix as qc-format text (with trailing newline)."""
    head = "unbound" if not E.bound else str(E.n)
    header = f"{head} {E.shape[0]} {E.shape[1]}"
    if E.prelift_n1 is not None:
        header += f" prelift {E.prelift_n1}"
    out = [header]
    for row in E.rows:
        out.append(" ".join(
            "." if cell is None else ",".join(str(e) for e in cell)
            for cell in row
        ))
    return "\n".join(out) + "\n"


def render_alist(M: np.ndarray) -> str:
    """Render a 0/1 matrix (rows are checks) as alist text."""
    require_binary(M, "alist source")
    M = np.asarray(M)
    m, n = M.shape
    cols = [list(np.flatnonzero(M[:, j]) + 1) for j in range(n)]
    rows = [list(np.flatnonzero(M[i, :]) + 1) for i in range(m)]
    out = [
        f"{n} {m}",
        f"{max((len(c) for c in cols), default=0)} "
        f"{max((len(r) for r in rows), default=0)}",
        " ".join(str(len(c)) for c in cols),
        " ".join(str(len(r)) for r in rows),
    ]
    out.extend(" ".join(str(i) for i in c) for c in cols)
    out.extend(" ".join(str(j) for j in r) for r in rows)
    return "\n".join(out) + "\n"


def parse_alist(text: str) -> np.ndarray:
    """Parse alist text back into a 0/1 matrix, checking cross references.

    Tolerates the common zero-padded variant: trailing zeros in a
    neighbor list beyond the declared degree are dropped.
    """
    toklines = [ln.split() for ln in text.splitlines() if ln.strip()]
    try:
        n, m = (int(t) for t in toklines[0])
        col_deg = [int(t) for t in toklines[2]]
        row_deg = [int(t) for t in toklines[3]]
        start = 4
        cols = [
            [int(t) for t in toklines[start + j][: col_deg[j]]]
            for j in range(n)
        ]
        rows = [
            [int(t) for t in toklines[start + n + i][: row_deg[i]]]
            for i in range(m)
        ]
    except (IndexError, ValueError):
        raise FormatError("truncated or malformed alist") from None
    if len(col_deg) != n or len(row_deg) != m:
        raise FormatError("alist degree lists do not match dimensions")
    M = np.zeros((m, n), dtype=np.int64)
    for j, neighbors in enumerate(cols):
        for i in neighbors:
            if not 1 <= i <= m:
                raise FormatError(f"alist row index {i} out of range")
            M[i - 1, j] = 1
    for i, neighbors in enumerate(rows):
        for j in neighbors:
            if not 1 <= j <= n:
                raise FormatError(f"alist column index {j} out of range")
            if not M[i, j - 1]:
                raise FormatError(
                    f"alist row list names ({i + 1}, {j}) but the column "
                    "list does not"
                )
    if int(M.sum()) != sum(col_deg) or sum(col_deg) != sum(row_deg):
        raise FormatError("alist row and column lists disagree")
    return M


def export_alist(E: ExponentMatrix, path) -> None:
    """Write the alist of expand(E) to path.  E must be bound and its
    expansion 0/1 (a parallel edge has no alist encoding)."""
    if not E.bound:
        raise FormatError("alist export needs a bound matrix")
    with open(path, "w") as fh:
        fh.write(render_alist(E.expand()))
