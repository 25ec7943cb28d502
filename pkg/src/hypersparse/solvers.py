"""Projected subgradient solvers over hypergraph quadratic forms.

All three problems minimize ``Q_G(x) - 2 c.x`` with some coordinates pinned:

* effective resistance: ``c = e_s - e_t``, nothing pinned (the negated
  optimum is ``R_G(s, t)``);
* constrained energy: ``c = 0``, ``x(s) = 1`` and ``x(t) = -1``;
* semi-supervised labels: ``c = 0``, labeled vertices pinned.

Steps are ``step0 / (L sqrt(k))`` where ``L = 4 max_v deg_w(v)`` bounds the
curvature of ``Q``; the best iterate is returned.
"""
from collections import deque
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import Labeling, quadratic_form
from .errors import InputError, UnboundedError


@dataclass(frozen=True)
class SolverParams:
    max_iters: int = 100_000
    tol: float = 1e-8
    step0: float = 1.0
    window: int = 100

    def __post_init__(self):
        if int(self.max_iters) < 1:
            raise InputError("max_iters must be at least 1")
        if not self.tol > 0:
            raise InputError("tol must be positive")
        if not self.step0 > 0:
            raise InputError("step0 must be positive")
        if int(self.window) < 1:
            raise InputError("window must be at least 1")


@dataclass(frozen=True)
class SolveResult:
    x: np.ndarray
    objective: float
    iterations: int
    converged: bool


def subgradient(G, x):
    """A subgradient of ``Q_G`` at ``x``.

    Per edge the maximizing pair ``(u*, v*)`` (lowest ids on ties) contributes
    ``2 w(e) (x(u*) - x(v*)) (e_u* - e_v*)`` when the gap is positive.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (G.n,):
        raise InputError(f"expected a vector of length {G.n}, got shape {x.shape}")
    return kernels.subgradient(*G.arrays, x)[1]


def curvature_bound(G):
    """``4 max_v`` (weighted degree of ``v`` over tail-or-head incidences)."""
    deg = np.zeros(G.n)
    if G.directed:
        for (t, h), w in zip(G.arcs, G.weights):
            deg[list(set(t) | set(h))] += w
    else:
        for e, w in G:
            deg[list(e)] += w
    return 4.0 * float(deg.max(initial=0.0))


def reachable(G, s, t):
    """Whether ``t`` can be reached from ``s`` moving from tails to heads.

    For undirected hypergraphs this is plain connectivity.
    """
    out = [[] for _ in range(G.n)]
    pairs = G.arcs if G.directed else ((e, e) for e in G.edges)
    for tail, head in pairs:
        for u in tail:
            out[u].append(head)
    seen = {s}
    todo = deque([s])
    while todo:
        u = todo.popleft()
        for head in out[u]:
            for v in head:
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
    return t in seen


def _solve(G, c, free, x0, params):
    scale = curvature_bound(G) or 1.0
    tptr, tidx, hptr, hidx, w = G.arrays
    x, _, iters, converged = kernels.minimize(
        tptr, tidx, hptr, hidx, w,
        np.ascontiguousarray(c, dtype=np.float64),
        np.ascontiguousarray(free, dtype=np.bool_),
        np.ascontiguousarray(x0, dtype=np.float64),
        float(params.step0) / scale, int(params.max_iters), float(params.tol),
        int(params.window))
    return np.asarray(x), int(iters), bool(converged)


def _check_pair(G, s, t):
    s, t = int(s), int(t)
    for v in (s, t):
        if not 0 <= v < G.n:
            raise InputError(f"vertex {v} out of range for n={G.n}")
    if s == t:
        raise InputError("s and t must differ")
    return s, t


def effective_resistance(G, s, t, params=None):
    """``R_G(s, t) = max_x 2 (x(s) - x(t)) - Q_G(x)`` by supergradient ascent.

    Raises:
        UnboundedError: ``t`` is unreachable from ``s``, so the supremum is
            infinite.
    """
    params = params or SolverParams()
    s, t = _check_pair(G, s, t)
    if not reachable(G, s, t):
        raise UnboundedError(f"vertex {t} is not reachable from {s}; resistance is infinite")
    c = np.zeros(G.n)
    c[s], c[t] = 1.0, -1.0
    x, iters, conv = _solve(G, c, np.ones(G.n, dtype=bool), np.zeros(G.n), params)
    value = 2.0 * (x[s] - x[t]) - quadratic_form(G, x)
    return SolveResult(x, float(value), iters, conv)


def graph_resistance_oracle(G, s, t):
    """Classical resistance of a graph from its Laplacian (test oracle).

    Grounds ``t`` and solves ``L x = e_s`` on the component of ``s``.
    """
    s, t = _check_pair(G, s, t)
    if any(len(e) != 2 for e in G.edges):
        raise InputError("the oracle needs a graph (2-vertex edges only)")
    if not reachable(G, s, t):
        raise UnboundedError(f"vertices {s} and {t} are disconnected")
    L = np.zeros((G.n, G.n))
    for (u, v), w in G:
        L[[u, v], [u, v]] += w
        L[u, v] -= w
        L[v, u] -= w
    comp = sorted(_component(G, s))
    keep = [v for v in comp if v != t]
    b = np.zeros(len(keep))
    b[keep.index(s)] = 1.0
    x = np.linalg.solve(L[np.ix_(keep, keep)], b)
    return float(x[keep.index(s)])


def _component(G, s):
    seen = {s}
    todo = [s]
    adj = [[] for _ in range(G.n)]
    for u, v in G.edges:
        adj[u].append(v)
        adj[v].append(u)
    while todo:
        u = todo.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return seen


def constrained_energy(G, s, t, params=None):
    """``min Q_G(x)`` subject to ``x(s) = 1``, ``x(t) = -1``.

    Reported as is; for a graph this equals ``4 / R_G(s, t)``, not the
    resistance itself.
    """
    params = params or SolverParams()
    s, t = _check_pair(G, s, t)
    free = np.ones(G.n, dtype=bool)
    free[[s, t]] = False
    x0 = np.zeros(G.n)
    x0[s], x0[t] = 1.0, -1.0
    x, iters, conv = _solve(G, np.zeros(G.n), free, x0, params)
    return SolveResult(x, quadratic_form(G, x), iters, conv)


def ssl_solve(G, labels, params=None):
    """Complete ``labels`` by minimizing ``Q_G`` with labeled vertices pinned.

    Unlabeled vertices start at the mean label. ``labels`` is a
    :class:`~hypersparse.core.Labeling` or a plain ``{vertex: value}`` dict.
    """
    params = params or SolverParams()
    if not isinstance(labels, Labeling):
        labels = Labeling(dict(labels))
    mask, values = labels.arrays(G.n)
    if not mask.any():
        return SolveResult(np.zeros(G.n), 0.0, 0, True)
    x0 = np.where(mask, values, values[mask].mean())
    x, iters, conv = _solve(G, np.zeros(G.n), ~mask, x0, params)
    return SolveResult(x, quadratic_form(G, x), iters, conv)


__all__ = [
    "SolveResult", "SolverParams", "constrained_energy", "curvature_bound",
    "effective_resistance", "graph_resistance_oracle", "reachable",
    "ssl_solve", "subgradient",
]
