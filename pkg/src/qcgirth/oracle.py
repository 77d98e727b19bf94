"""Exact graph-side answers: BFS girth and brute-force minimum distance.

These routines know nothing about circulant structure.  They take a plain
0/1 biadjacency matrix (checks x variables), so they can cross-examine every
algebraic shortcut in the package on equal terms.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._threads import worker_count
from .report import METHOD_BFS, GirthReport

_BATCH = 256  # sources per BFS batch; fixed so results cannot depend on it


def _csr(M: np.ndarray):
    """Adjacency of the Tanner graph: checks 0..R-1, variables R..R+C-1."""
    rows_idx, cols_idx = np.nonzero(M)
    R, C = M.shape
    V = R + C
    u = np.concatenate([rows_idx, cols_idx + R])
    v = np.concatenate([cols_idx + R, rows_idx])
    order = np.argsort(u, kind="stable")
    indices = v[order].astype(np.int64)
    indptr = np.zeros(V + 1, dtype=np.int64)
    np.cumsum(np.bincount(u, minlength=V), out=indptr[1:])
    return indptr, indices, V, R


def _batch_best(indptr, indices, V, sources, best):
    """Shortest cycle through any source in the batch, if shorter than best."""
    S = sources.shape[0]
    dist = np.full(S * V, -1, dtype=np.int32)
    parent = np.full(S * V, -1, dtype=np.int64)
    frontier = np.arange(S, dtype=np.int64) * V + sources
    dist[frontier] = 0
    d = 0
    while frontier.size and (best is None or 2 * d < best):
        local = frontier % V
        counts = indptr[local + 1] - indptr[local]
        total = int(counts.sum())
        if total == 0:
            break
        src_rep = np.repeat(frontier, counts)
        starts = np.repeat(indptr[local], counts)
        offsets = np.arange(total, dtype=np.int64) - np.repeat(
            np.cumsum(counts) - counts, counts
        )
        nb = (src_rep // V) * V + indices[starts + offsets]
        keep = nb != parent[src_rep]
        src_rep = src_rep[keep]
        nb = nb[keep]
        dnb = dist[nb]
        if d >= 1 and np.any(dnb == d - 1):
            cand = 2 * d
            if best is None or cand < best:
                best = cand
                if best == 4:
                    return best
        unseen = dnb == -1
        nb_u = nb[unseen]
        if nb_u.size:
            src_u = src_rep[unseen]
            uniq, first = np.unique(nb_u, return_index=True)
            dist[uniq] = d + 1
            parent[uniq] = src_u[first]
            if uniq.size != nb_u.size:
                cand = 2 * d + 2
                if best is None or cand < best:
                    best = cand
                    if best == 4:
                        return best
            frontier = uniq
        else:
            frontier = nb_u
        d += 1
    return best


def _chunk_best(args):
    indptr, indices, V, chunk = args
    best = None
    for lo in range(0, chunk.shape[0], _BATCH):
        best = _batch_best(indptr, indices, V, chunk[lo : lo + _BATCH], best)
        if best == 4:
            break
    return best


def _paths_to_root(parent, node):
    out = [node]
    while parent[out[-1]] != -1:
        out.append(parent[out[-1]])
    return out  # node .. root


def _witness_from_source(indptr, indices, V, s, girth):
    """One cycle of length `girth` through s, or None if s lies on none."""
    dist = np.full(V, -1, dtype=np.int32)
    parent = np.full(V, -1, dtype=np.int64)
    dist[s] = 0
    frontier = np.array([s], dtype=np.int64)
    d = 0
    while frontier.size and 2 * d <= girth:
        counts = indptr[frontier + 1] - indptr[frontier]
        total = int(counts.sum())
        if total == 0:
            break
        src_rep = np.repeat(frontier, counts)
        starts = np.repeat(indptr[frontier], counts)
        offsets = np.arange(total, dtype=np.int64) - np.repeat(
            np.cumsum(counts) - counts, counts
        )
        nb = indices[starts + offsets]
        keep = nb != parent[src_rep]
        src_rep = src_rep[keep]
        nb = nb[keep]
        dnb = dist[nb]
        back = np.nonzero(dnb == d - 1)[0]
        if back.size and 2 * d == girth:
            u, w = int(src_rep[back[0]]), int(nb[back[0]])
            path_u = _paths_to_root(parent, u)  # u .. s
            path_w = _paths_to_root(parent, w)  # w .. s
            return list(reversed(path_u)) + path_w[:-1]
        unseen = dnb == -1
        nb_u = nb[unseen]
        if nb_u.size:
            src_u = src_rep[unseen]
            uniq, first = np.unique(nb_u, return_index=True)
            dist[uniq] = d + 1
            parent[uniq] = src_u[first]
            if uniq.size != nb_u.size and 2 * d + 2 == girth:
                order = np.argsort(nb_u, kind="stable")
                nb_s = nb_u[order]
                dup = np.nonzero(nb_s[1:] == nb_s[:-1])[0][0]
                w = int(nb_s[dup])
                u1 = int(src_u[order[dup]])
                u2 = int(src_u[order[dup + 1]])
                path1 = _paths_to_root(parent, u1)
                path2 = _paths_to_root(parent, u2)
                return list(reversed(path1)) + [w] + path2[:-1]
            frontier = uniq
        else:
            frontier = nb_u
        d += 1
    return None


def _label(node: int, R: int):
    return ("c", node) if node < R else ("v", node - R)


def girth_bfs_oracle(M, *, witness: bool = True) -> GirthReport:
    """Exact Tanner-graph girth of a biadjacency matrix, by breadth-first
    search from every check node.

    Parameters
    ----------
    M:
        Integer matrix; rows are checks, columns variables.  An entry of 2
        or more denotes parallel edges and short-circuits to girth 2.
    witness:
        Also reconstruct one shortest cycle (as a tuple of ("c", i) /
        ("v", j) labels).  The witness is deterministic: searches restart
        from the lowest-numbered check on a shortest cycle.

    Notes
    -----
    The scan fans out over QCGIRTH_THREADS workers; the reduction is a plain
    minimum, so reports do not depend on the worker count.
    """
    M = np.asarray(M)
    if M.ndim != 2:
        raise ValueError("expected a 2-D biadjacency matrix")
    if M.size and int(M.max(initial=0)) >= 2:
        r, c = np.argwhere(M >= 2)[0]
        cyc = (("c", int(r)), ("v", int(c))) if witness else ()
        return GirthReport(2, METHOD_BFS, witnesses=(cyc,) if witness else ())
    indptr, indices, V, R = _csr(M)
    if indices.size == 0:
        return GirthReport(None, METHOD_BFS)
    sources = np.arange(R, dtype=np.int64)
    workers = min(worker_count(), max(1, R // _BATCH))
    if workers <= 1:
        best = _chunk_best((indptr, indices, V, sources))
    else:
        chunks = np.array_split(sources, workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(_chunk_best, [(indptr, indices, V, ch) for ch in chunks])
            )
        found = [b for b in results if b is not None]
        best = min(found) if found else None
    if best is None:
        return GirthReport(None, METHOD_BFS)
    wit = ()
    if witness:
        for s in range(R):
            cycle = _witness_from_source(indptr, indices, V, s, best)
            if cycle is not None:
                wit = (tuple(_label(n, R) for n in cycle),)
                break
    return GirthReport(best, METHOD_BFS, witnesses=wit)


# ---------------------------------------------------------------------------
# Minimum distance by exhaustive nullspace enumeration


@dataclass(frozen=True)
class DistanceResult:
    """Minimum distance of the binary code {x : M x = 0 over GF(2)}.

    status is "exact" (distance set), "no-codewords" (trivial nullspace) or
    "infeasible" (dimension above the enumeration cap; distance is None).
    """

    dimension: int
    distance: int | None
    status: str


if hasattr(np, "bitwise_count"):

    def _popcount(x: np.ndarray) -> np.ndarray:
        return np.bitwise_count(x)

else:  # pragma: no cover - older numpy

    _LUT = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)

    def _popcount(x: np.ndarray) -> np.ndarray:
        return _LUT[x.view(np.uint16)].reshape(*x.shape, -1).sum(axis=-1)


def _pack_rows(A: np.ndarray) -> np.ndarray:
    m, n = A.shape
    W = (n + 63) // 64
    packed = np.zeros((m, W), dtype=np.uint64)
    r, c = np.nonzero(A)
    np.bitwise_or.at(
        packed,
        (r, c // 64),
        np.left_shift(np.uint64(1), (c % 64).astype(np.uint64)),
    )
    return packed


def gf2_nullspace(M) -> np.ndarray:
    """Basis of the right nullspace over GF(2), packed 64 columns per word."""
    A = (np.asarray(M) % 2).astype(np.uint8)
    m, n = A.shape
    packed = _pack_rows(A)
    pivcols: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        w, b = divmod(c, 64)
        col = (packed[r:, w] >> np.uint64(b)) & np.uint64(1)
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            packed[[r, p]] = packed[[p, r]]
        col_all = (packed[:, w] >> np.uint64(b)) & np.uint64(1)
        clear = np.nonzero(col_all)[0]
        clear = clear[clear != r]
        packed[clear] ^= packed[r]
        pivcols.append(c)
        r += 1
    free = sorted(set(range(n)) - set(pivcols))
    k = len(free)
    W = (n + 63) // 64
    basis = np.zeros((k, W), dtype=np.uint64)
    for idx, f in enumerate(free):
        basis[idx, f // 64] |= np.uint64(1) << np.uint64(f % 64)
        fw, fb = divmod(f, 64)
        for i, p in enumerate(pivcols):
            if (packed[i, fw] >> np.uint64(fb)) & np.uint64(1):
                basis[idx, p // 64] |= np.uint64(1) << np.uint64(p % 64)
    return basis


def _subset_xors(rows: np.ndarray) -> np.ndarray:
    k, W = rows.shape
    out = np.zeros((1 << k, W), dtype=np.uint64)
    size = 1
    for i in range(k):
        out[size : 2 * size] = out[:size] ^ rows[i]
        size *= 2
    return out


def min_distance_nullspace(M, max_dim: int = 28) -> DistanceResult:
    """Exact minimum distance by meet-in-the-middle nullspace enumeration.

    Splits a nullspace basis of dimension k <= max_dim into halves,
    tabulates all subset XORs of each half and scans the cross products, so
    the work is O(2^k) vectorized word operations rather than a python loop
    over all codewords.
    """
    basis = gf2_nullspace(M)
    k = basis.shape[0]
    if k == 0:
        return DistanceResult(0, None, "no-codewords")
    if k > max_dim:
        return DistanceResult(k, None, "infeasible")
    k1 = k // 2
    left = _subset_xors(basis[:k1])
    right = _subset_xors(basis[k1:])
    best = None
    block = max(1, (1 << 22) // max(1, right.shape[0]))
    for lo in range(0, left.shape[0], block):
        X = left[lo : lo + block, None, :] ^ right[None, :, :]
        weights = _popcount(X).sum(axis=-1, dtype=np.int64)
        if lo == 0:
            weights[0, 0] = np.iinfo(np.int64).max  # the zero codeword
        w = int(weights.min())
        if best is None or w < best:
            best = w
    return DistanceResult(k, best, "exact")
