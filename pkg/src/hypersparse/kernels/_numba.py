"""Loop kernels compiled with numba.

Every kernel works on the tail/head CSR layout produced by
``hypersparse.core``: arc ``e`` has tail ids ``tidx[tptr[e]:tptr[e+1]]`` and
head ids ``hidx[hptr[e]:hptr[e+1]]``, both sorted ascending. Undirected
hyperedges are stored with tail == head.
"""
import math

import numpy as np
from numba import njit


@njit(cache=True)
def quad_forms(tptr, tidx, hptr, hidx, w, X):
    k = X.shape[0]
    m = w.shape[0]
    out = np.zeros(k)
    for r in range(k):
        acc = 0.0
        for e in range(m):
            top = -np.inf
            for a in range(tptr[e], tptr[e + 1]):
                v = X[r, tidx[a]]
                if v > top:
                    top = v
            bot = np.inf
            for b in range(hptr[e], hptr[e + 1]):
                v = X[r, hidx[b]]
                if v < bot:
                    bot = v
            gap = top - bot
            if gap > 0.0:
                acc += w[e] * gap * gap
        out[r] = acc
    return out


@njit(cache=True)
def _objective_subgrad(tptr, tidx, hptr, hidx, w, x, g):
    # g is overwritten; returns Q(x)
    g[:] = 0.0
    q = 0.0
    for e in range(w.shape[0]):
        u = tidx[tptr[e]]
        for a in range(tptr[e] + 1, tptr[e + 1]):
            if x[tidx[a]] > x[u]:
                u = tidx[a]
        v = hidx[hptr[e]]
        for b in range(hptr[e] + 1, hptr[e + 1]):
            if x[hidx[b]] < x[v]:
                v = hidx[b]
        gap = x[u] - x[v]
        if gap > 0.0:
            q += w[e] * gap * gap
            g[u] += 2.0 * w[e] * gap
            g[v] -= 2.0 * w[e] * gap
    return q


@njit(cache=True)
def subgradient(tptr, tidx, hptr, hidx, w, x):
    g = np.zeros(x.shape[0])
    q = _objective_subgrad(tptr, tidx, hptr, hidx, w, x, g)
    return q, g


@njit(cache=True)
def codegree(n, tptr, tidx, hptr, hidx, w):
    d = np.zeros((n, n))
    for e in range(w.shape[0]):
        for a in range(tptr[e], tptr[e + 1]):
            u = tidx[a]
            for b in range(hptr[e], hptr[e + 1]):
                d[u, hidx[b]] += w[e]
    return d


@njit(cache=True)
def min_pair_codegree(tptr, tidx, hptr, hidx, d, include_diagonal):
    m = tptr.shape[0] - 1
    out = np.full(m, np.inf)
    for e in range(m):
        best = np.inf
        for a in range(tptr[e], tptr[e + 1]):
            u = tidx[a]
            for b in range(hptr[e], hptr[e + 1]):
                v = hidx[b]
                if u == v and not include_diagonal:
                    continue
                if d[u, v] < best:
                    best = d[u, v]
        out[e] = best
    return out


@njit(cache=True)
def cut_values(tmask, hmask, w, n):
    total = 1 << n
    full = total - 1
    out = np.zeros(total)
    m = w.shape[0]
    for s in range(total):
        comp = full ^ s
        acc = 0.0
        for e in range(m):
            if (tmask[e] & s) != 0 and (hmask[e] & comp) != 0:
                acc += w[e]
        out[s] = acc
    return out


@njit(cache=True)
def _crossing_matrix(ranks, tptr, tidx, hptr, hidx, w, n, A, D):
    size = n - 1
    A[:, :] = 0.0
    for e in range(w.shape[0]):
        lo = n
        for a in range(tptr[e], tptr[e + 1]):
            r = ranks[tidx[a]]
            if r < lo:
                lo = r
        hi = -1
        for b in range(hptr[e], hptr[e + 1]):
            r = ranks[hidx[b]]
            if r > hi:
                hi = r
        if lo < hi:
            A[lo, hi - 1] += w[e]
    # D[i, j] = sum of A[a, b] over a <= min(i, j), b >= max(i, j)
    for a in range(size):
        for b in range(size - 2, -1, -1):
            A[a, b] += A[a, b + 1]
    for i in range(size):
        for j in range(i, size):
            s = 0.0
            for a in range(i + 1):
                s += A[a, j]
            D[i, j] = s
            D[j, i] = s


@njit(cache=True)
def certificate_scan(perms, g_arrays, h_arrays, eps):
    gt, gti, gh, ghi, gw = g_arrays
    ht, hti, hh, hhi, hw = h_arrays
    n = perms.shape[1]
    size = n - 1
    ranks = np.empty(n, dtype=np.int64)
    A = np.zeros((max(size, 1), max(size, 1)))
    DG = np.zeros((max(size, 1), max(size, 1)))
    DH = np.zeros((max(size, 1), max(size, 1)))
    fail_p, fail_i, fail_j = -1, -1, -1
    lo_ratio, hi_ratio = np.inf, -np.inf
    checks = 0
    for p in range(perms.shape[0]):
        for i in range(n):
            ranks[perms[p, i]] = i
        _crossing_matrix(ranks, gt, gti, gh, ghi, gw, n, A, DG)
        _crossing_matrix(ranks, ht, hti, hh, hhi, hw, n, A, DH)
        for i in range(size):
            for j in range(i, size):
                checks += 1
                g = DG[i, j]
                h = DH[i, j]
                slack = 1e-9 * max(g, h, 1.0)
                bad = g > (1.0 + eps) * h + slack or g < (1.0 - eps) * h - slack
                if bad and fail_p < 0:
                    fail_p, fail_i, fail_j = p, i, j
                if g > 0.0 and h > 0.0:
                    r = g / h
                    if r < lo_ratio:
                        lo_ratio = r
                    if r > hi_ratio:
                        hi_ratio = r
    return fail_p, fail_i, fail_j, lo_ratio, hi_ratio, checks


@njit(cache=True)
def minimize(tptr, tidx, hptr, hidx, w, c, free, x0, step_scale, max_iters,
             tol, window):
    n = x0.shape[0]
    x = x0.copy()
    g = np.zeros(n)
    f = _objective_subgrad(tptr, tidx, hptr, hidx, w, x, g)
    for v in range(n):
        f -= 2.0 * c[v] * x[v]
    best_f = f
    best_x = x.copy()
    mark = best_f
    converged = False
    iters = 0
    for k in range(1, max_iters + 1):
        nonzero = False
        for v in range(n):
            if free[v]:
                g[v] -= 2.0 * c[v]
                if g[v] != 0.0:
                    nonzero = True
            else:
                g[v] = 0.0
        if not nonzero:
            converged = True
            break
        step = step_scale / math.sqrt(k)
        for v in range(n):
            x[v] -= step * g[v]
        f = _objective_subgrad(tptr, tidx, hptr, hidx, w, x, g)
        for v in range(n):
            f -= 2.0 * c[v] * x[v]
        iters = k
        if f < best_f:
            best_f = f
            best_x[:] = x
        if k % window == 0:
            if abs(mark - best_f) <= tol * abs(best_f):
                converged = True
                break
            mark = best_f
    return best_x, best_f, iters, converged
