"""Vectorized numpy versions of the kernels in ``_numba``.

Same signatures and return values; used when numba is disabled or missing.
"""
import math

import numpy as np

# cap on the size of temporary (batch, nnz) arrays
_CHUNK = 1 << 22


def _segments(ptr):
    lengths = np.diff(ptr)
    return np.repeat(np.arange(lengths.size), lengths), lengths


def quad_forms(tptr, tidx, hptr, hidx, w, X):
    X = np.atleast_2d(X)
    if w.size == 0:
        return np.zeros(X.shape[0])
    rows = max(1, _CHUNK // max(tidx.size + hidx.size, 1))
    out = np.empty(X.shape[0])
    for start in range(0, X.shape[0], rows):
        block = X[start:start + rows]
        top = np.maximum.reduceat(block[:, tidx], tptr[:-1], axis=1)
        bot = np.minimum.reduceat(block[:, hidx], hptr[:-1], axis=1)
        gap = np.maximum(top - bot, 0.0)
        out[start:start + rows] = (gap * gap) @ w
    return out


def _first_extreme(vals, ptr, ufunc):
    # position (into vals) of the first extreme entry of every segment
    ext = ufunc.reduceat(vals, ptr[:-1])
    seg, lengths = _segments(ptr)
    hits = np.flatnonzero(vals == np.repeat(ext, lengths))
    _, first = np.unique(seg[hits], return_index=True)
    return hits[first]


def subgradient(tptr, tidx, hptr, hidx, w, x):
    g = np.zeros(x.shape[0])
    if w.size == 0:
        return 0.0, g
    u = tidx[_first_extreme(x[tidx], tptr, np.maximum)]
    v = hidx[_first_extreme(x[hidx], hptr, np.minimum)]
    gap = np.maximum(x[u] - x[v], 0.0)
    coef = 2.0 * w * gap
    np.add.at(g, u, coef)
    np.add.at(g, v, -coef)
    return float(w @ (gap * gap)), g


def codegree(n, tptr, tidx, hptr, hidx, w):
    d = np.zeros((n, n))
    for e in range(w.size):
        tail = tidx[tptr[e]:tptr[e + 1]]
        head = hidx[hptr[e]:hptr[e + 1]]
        d[np.ix_(tail, head)] += w[e]
    return d


def min_pair_codegree(tptr, tidx, hptr, hidx, d, include_diagonal):
    m = tptr.size - 1
    out = np.full(m, np.inf)
    for e in range(m):
        tail = tidx[tptr[e]:tptr[e + 1]]
        head = hidx[hptr[e]:hptr[e + 1]]
        block = d[np.ix_(tail, head)]
        if not include_diagonal:
            block = np.where(tail[:, None] == head[None, :], np.inf, block)
        if block.size:
            out[e] = block.min()
    return out


def cut_values(tmask, hmask, w, n):
    total = 1 << n
    full = np.int64(total - 1)
    out = np.empty(total)
    rows = max(1, _CHUNK // max(w.size, 1))
    for start in range(0, total, rows):
        s = np.arange(start, min(start + rows, total), dtype=np.int64)
        hit = ((s[:, None] & tmask) != 0) & (((full ^ s)[:, None] & hmask) != 0)
        out[start:start + s.size] = hit @ w
    return out


def _crossing_batch(ranks, tptr, tidx, hptr, hidx, w, n):
    p = ranks.shape[0]
    if w.size == 0:
        return np.zeros((p, n - 1, n - 1))
    lo = np.minimum.reduceat(ranks[:, tidx], tptr[:-1], axis=1)
    hi = np.maximum.reduceat(ranks[:, hidx], hptr[:-1], axis=1)
    pos = np.arange(n - 1)
    B = ((lo[:, :, None] <= pos) & (pos < hi[:, :, None])).astype(float)
    return np.matmul(np.swapaxes(B * w[None, :, None], 1, 2), B)


def certificate_scan(perms, g_arrays, h_arrays, eps):
    n = perms.shape[1]
    m = max(g_arrays[4].size, h_arrays[4].size, 1)
    rows = max(1, _CHUNK // (m * max(n - 1, 1)))
    fail = (-1, -1, -1)
    lo_ratio, hi_ratio = np.inf, -np.inf
    iu, ju = np.triu_indices(max(n - 1, 0))
    checks = 0
    for start in range(0, perms.shape[0], rows):
        block = perms[start:start + rows]
        ranks = np.empty_like(block)
        ranks[np.arange(block.shape[0])[:, None], block] = np.arange(n)
        g = _crossing_batch(ranks, *g_arrays, n)[:, iu, ju]
        h = _crossing_batch(ranks, *h_arrays, n)[:, iu, ju]
        checks += g.size
        slack = 1e-9 * np.maximum(np.maximum(g, h), 1.0)
        bad = (g > (1.0 + eps) * h + slack) | (g < (1.0 - eps) * h - slack)
        if fail[0] < 0 and bad.any():
            p, k = np.unravel_index(np.argmax(bad), bad.shape)
            fail = (start + int(p), int(iu[k]), int(ju[k]))
        both = (g > 0) & (h > 0)
        if both.any():
            r = g[both] / h[both]
            lo_ratio = min(lo_ratio, r.min())
            hi_ratio = max(hi_ratio, r.max())
    return fail[0], fail[1], fail[2], lo_ratio, hi_ratio, checks


def minimize(tptr, tidx, hptr, hidx, w, c, free, x0, step_scale, max_iters,
             tol, window):
    x = x0.astype(float).copy()
    q, g = subgradient(tptr, tidx, hptr, hidx, w, x)
    f = q - 2.0 * (c @ x)
    best_f, best_x, mark = f, x.copy(), f
    converged = False
    iters = 0
    for k in range(1, max_iters + 1):
        g = np.where(free, g - 2.0 * c, 0.0)
        if not g.any():
            converged = True
            break
        x -= (step_scale / math.sqrt(k)) * g
        q, g = subgradient(tptr, tidx, hptr, hidx, w, x)
        f = q - 2.0 * (c @ x)
        iters = k
        if f < best_f:
            best_f = f
            best_x = x.copy()
        if k % window == 0:
            if abs(mark - best_f) <= tol * abs(best_f):
                converged = True
                break
            mark = best_f
    return best_x, best_f, iters, converged
