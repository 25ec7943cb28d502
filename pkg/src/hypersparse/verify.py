"""Checks that a reweighted hypergraph ``H`` approximates ``G``.

Every check tests ``(1 - eps) * val_H <= val_G <= (1 + eps) * val_H`` for some
family of values (cuts, quadratic forms, crossing degrees, resistances) and
reports the extreme ratios ``val_G / val_H`` seen. Only
:func:`certificate_check_all_permutations` proves the spectral property; a
failure there is not a refutation.
"""
from dataclasses import dataclass, field
import itertools
import math

import numpy as np

from . import kernels
from .core import quadratic_forms
from .errors import InputError, RefusalError, UnboundedError
from .solvers import SolverParams, effective_resistance

MAX_CUT_N = 22
MAX_CERT_N = 8
SOLVER_RTOL = 2e-3


@dataclass
class VerifyReport:
    passed: bool
    checks_run: int
    worst_ratio_low: float = math.inf
    worst_ratio_high: float = -math.inf
    witness: object = None
    details: dict = field(default_factory=dict)

    def to_dict(self):
        witness = self.witness
        if isinstance(witness, np.ndarray):
            witness = witness.tolist()
        elif isinstance(witness, (set, frozenset)):
            witness = sorted(witness)

        def finite(v):
            return v if math.isfinite(v) else None

        return {
            "passed": self.passed,
            "checks_run": self.checks_run,
            "worst_ratio_low": finite(self.worst_ratio_low),
            "worst_ratio_high": finite(self.worst_ratio_high),
            "witness": witness,
            "details": self.details,
        }


def _pair(G, H):
    if G.directed != H.directed:
        raise InputError("G and H must be of the same kind")
    if G.n != H.n:
        raise InputError(f"G has {G.n} vertices, H has {H.n}")


def _violations(g, h, eps, slack):
    return (g > (1.0 + eps) * h + slack) | (g < (1.0 - eps) * h - slack)


def _ratio_range(g, h):
    both = (g > 0) & (h > 0)
    if not both.any():
        return math.inf, -math.inf
    r = g[both] / h[both]
    return float(r.min()), float(r.max())


def _masks(G):
    tptr, tidx, hptr, hidx, _ = G.arrays
    bits = np.left_shift(np.int64(1), np.arange(G.n, dtype=np.int64))
    tmask = np.array([np.bitwise_or.reduce(bits[tidx[tptr[e]:tptr[e + 1]]])
                      for e in range(G.m)], dtype=np.int64)
    hmask = np.array([np.bitwise_or.reduce(bits[hidx[hptr[e]:hptr[e + 1]]])
                      for e in range(G.m)], dtype=np.int64)
    return tmask, hmask


def all_cut_values(G):
    """Cut weight of every subset; entry ``s`` is the subset with bitmask ``s``."""
    if G.n > MAX_CUT_N:
        raise RefusalError(f"exhaustive cut enumeration refused for n={G.n} > {MAX_CUT_N}")
    tmask, hmask = _masks(G)
    return kernels.cut_values(tmask, hmask, np.ascontiguousarray(G.weights), G.n)


def cut_check_exhaustive(G, H, eps):
    """Compare cut weights of ``G`` and ``H`` on all ``2^n`` vertex subsets.

    The witness is the first violating subset in bitmask order.
    """
    _pair(G, H)
    g, h = all_cut_values(G), all_cut_values(H)
    bad = _violations(g, h, eps, 1e-9 * np.maximum(np.maximum(g, h), 1.0))
    lo, hi = _ratio_range(g, h)
    witness = None
    if bad.any():
        s = int(np.argmax(bad))
        witness = frozenset(v for v in range(G.n) if s >> v & 1)
    return VerifyReport(not bad.any(), g.size, lo, hi, witness)


def spectral_check_random(G, H, eps, trials=1000, rng_seed=0):
    """Compare quadratic forms on random vectors: ``trials`` Gaussian vectors,
    every singleton indicator and ``trials`` random subset indicators.

    A pass is evidence only; the witness of a failure is the offending vector.
    """
    _pair(G, H)
    rng = np.random.default_rng(rng_seed)
    n = G.n
    X = np.vstack([
        rng.standard_normal((trials, n)),
        np.eye(n),
        (rng.random((trials, n)) < 0.5).astype(float),
    ])
    g, h = quadratic_forms(G, X), quadratic_forms(H, X)
    bad = _violations(g, h, eps, 1e-9 * np.maximum(g, h))
    lo, hi = _ratio_range(g, h)
    witness = X[int(np.argmax(bad))].copy() if bad.any() else None
    return VerifyReport(not bad.any(), X.shape[0], lo, hi, witness)


def certificate_check_all_permutations(G, H, eps):
    """Entrywise crossing-degree comparison of the collapses along every
    ordering.

    Passing proves ``H`` is an ``eps`` spectral sparsifier of ``G``: each
    per-ordering difference matrix is entrywise nonnegative, hence copositive.
    The witness is ``(order, i, j)`` with 1-based positions.
    """
    _pair(G, H)
    n = G.n
    if n > MAX_CERT_N:
        raise RefusalError(f"permutation enumeration refused for n={n} > {MAX_CERT_N}")
    if n < 2:
        return VerifyReport(True, 0)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    p, i, j, lo, hi, checks = kernels.certificate_scan(
        perms, G.arrays, H.arrays, float(eps))
    witness = None
    if p >= 0:
        witness = (tuple(int(v) for v in perms[p]), int(i) + 1, int(j) + 1)
    return VerifyReport(p < 0, int(checks), float(lo), float(hi), witness)


def _resistance(G, s, t, params):
    try:
        return effective_resistance(G, s, t, params).objective
    except UnboundedError:
        return math.inf


def resistance_check(G, H, eps, pairs, params=None, rtol=SOLVER_RTOL):
    """Compare effective resistances of ``G`` and ``H`` on vertex ``pairs``.

    Bands are ``(1 -/+ eps)(1 -/+ rtol)`` to absorb solver error. A pair that
    is unreachable in exactly one of the two hypergraphs fails.
    """
    _pair(G, H)
    params = params or SolverParams()
    lo, hi = math.inf, -math.inf
    witness = None
    values = []
    for s, t in pairs:
        rg, rh = _resistance(G, s, t, params), _resistance(H, s, t, params)
        values.append((int(s), int(t), rg, rh))
        if math.isinf(rg) and math.isinf(rh):
            continue
        ok = (math.isfinite(rg) and math.isfinite(rh)
              and (1 - eps) * (1 - rtol) * rh <= rg <= (1 + eps) * (1 + rtol) * rh)
        if math.isfinite(rg) and math.isfinite(rh) and rh > 0:
            lo, hi = min(lo, rg / rh), max(hi, rg / rh)
        if not ok and witness is None:
            witness = (int(s), int(t))
    details = {"resistances": [
        {"s": s, "t": t,
         "R_G": rg if math.isfinite(rg) else None,
         "R_H": rh if math.isfinite(rh) else None}
        for s, t, rg, rh in values]}
    return VerifyReport(witness is None, len(values), lo, hi, witness, details)


def chernoff_bound(K, eps):
    """``2 exp(-eps^2 K / 3)``: tail bound for ``K`` summands each at most
    ``mean / K``."""
    return 2.0 * math.exp(-eps * eps * K / 3.0)


def concentration_selftest(K, p, trials, rng_seed=0, eps=0.3):
    """Empirical check of the Chernoff tail used by the round count.

    Draws ``trials`` sums of ``K`` coin flips scaled by ``1 / (K p)`` (mean 1)
    and compares the frequency of ``|sum - 1| >= eps`` against
    :func:`chernoff_bound` plus three binomial standard errors.
    """
    if K < 1 or trials < 1 or not 0 < p <= 1:
        raise InputError("need K >= 1, trials >= 1 and p in (0, 1]")
    rng = np.random.default_rng(rng_seed)
    flips = rng.random((trials, K)) < p
    sums = flips.sum(axis=1) / (K * p)
    freq = float(np.mean(np.abs(sums - 1.0) >= eps))
    bound = chernoff_bound(K, eps)
    limit = bound + 3.0 * math.sqrt(min(bound, 1.0) * max(1.0 - bound, 0.0) / trials)
    passed = freq <= limit
    return VerifyReport(
        passed, trials, float(sums.min()), float(sums.max()),
        None if passed else freq,
        {"frequency": freq, "bound": bound, "limit": limit},
    )


__all__ = [
    "VerifyReport", "all_cut_values", "certificate_check_all_permutations",
    "chernoff_bound", "concentration_selftest", "cut_check_exhaustive",
    "resistance_check", "spectral_check_random",
]
