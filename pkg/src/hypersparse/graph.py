"""Ordinary graphs seen through an ordering of their vertices.

Positions ``i = 1..n-1`` name the gaps between consecutive vertices of an
ordering; an edge crosses ``i`` when its endpoints sit on both sides. The
crossing-degree matrix ``d[i-1, j-1]`` is the weight of edges crossing both
``i`` and ``j``. Also the collapse of hypergraphs to graphs along an ordering
and the edge-sampling routine whose output is accurate on the ordering's cone.
"""
import math

import numpy as np

from .core import Permutation, UndirectedHypergraph
from .errors import InputError


class Graph(UndirectedHypergraph):
    """Undirected weighted graph; parallel edges are allowed."""

    def __init__(self, n, edges=()):
        super().__init__(n, edges)
        for e in self.edges:
            if len(e) != 2:
                raise InputError(f"graph edges need exactly 2 vertices, got {e}")

    def laplacian(self):
        L = np.zeros((self.n, self.n))
        for (u, v), w in self:
            L[u, u] += w
            L[v, v] += w
            L[u, v] -= w
            L[v, u] -= w
        return L


def _check_perm(G, perm):
    if len(perm) != G.n:
        raise InputError(f"permutation has length {len(perm)}, graph has {G.n} vertices")


def _span(e, perm):
    ranks = [int(perm.rank[v]) for v in e]
    return min(ranks), max(ranks)


def crosses(e, i, perm):
    """Whether the edge ``e = (u, v)`` crosses position ``i`` (1-based)."""
    u, v = e
    if u == v:
        raise InputError("edge endpoints must differ")
    lo, hi = _span(e, perm)
    return lo <= i < hi


def crossing_degrees(G, perm):
    """``(n-1) x (n-1)`` matrix; entry ``[i-1, j-1]`` is ``d_{G,pi}(i, j)``."""
    _check_perm(G, perm)
    size = max(G.n - 1, 0)
    d = np.zeros((size, size))
    for e, w in G:
        lo, hi = _span(e, perm)
        # 0-based positions lo-1 .. hi-2
        d[lo - 1:hi - 1, lo - 1:hi - 1] += w
    return d


def build_B_pi(G, perm):
    """``|E| x (n-1)`` 0/1 matrix with ``B[e, i-1] = 1`` iff ``e`` crosses ``i``."""
    _check_perm(G, perm)
    B = np.zeros((G.m, max(G.n - 1, 0)))
    for k, e in enumerate(G.edges):
        lo, hi = _span(e, perm)
        B[k, lo - 1:hi - 1] = 1.0
    return B


def graph_thresholds(G, perm):
    """Per-edge sampling thresholds ``w(e) / min_{i,j crossed by e} d(i, j)``."""
    if G.m == 0:
        raise InputError("graph has no edges")
    d = crossing_degrees(G, perm)
    p = np.empty(G.m)
    for k, (e, w) in enumerate(G):
        lo, hi = _span(e, perm)
        p[k] = w / d[lo - 1:hi - 1, lo - 1:hi - 1].min()
    return p


def graph_rounds(n, epsilon, delta):
    """Round count ``ceil(3 (ln 2 + ln C(n,2) + ln(1/delta)) / epsilon^2)``."""
    _check_eps_delta(epsilon, delta)
    pairs = max(math.comb(n, 2), 1)
    return math.ceil(3.0 * (math.log(2.0) + math.log(pairs) - math.log(delta)) / epsilon**2)


def _check_eps_delta(epsilon, delta):
    if not 0.0 < epsilon < 1.0:
        raise InputError(f"epsilon must lie in (0, 1), got {epsilon}")
    if not 0.0 < delta < 1.0:
        raise InputError(f"delta must lie in (0, 1), got {delta}")


def edge_rng(seed, e):
    """Independent random stream for edge ``e`` under root ``seed``."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(int(e),)))


def round_successes(K, p, seed, e):
    """Success count over ``K`` explicit Bernoulli(``p``) rounds for edge ``e``."""
    return int(np.count_nonzero(edge_rng(seed, e).random(K) < p))


def algorithm1(G, perm, epsilon, delta, p, rng_seed):
    """Sample every edge in ``K`` rounds, reweighting kept copies by ``1/(K p_e)``.

    Returns a :class:`Graph` on the same vertices holding the edges sampled at
    least once. With ``p`` at least :func:`graph_thresholds`, the output is an
    ``epsilon`` spectral sparsifier on the cone of ``perm`` with probability at
    least ``1 - delta``.
    """
    _check_perm(G, perm)
    p = np.asarray(p, dtype=np.float64)
    if p.shape != (G.m,):
        raise InputError(f"expected {G.m} probabilities, got shape {p.shape}")
    if np.any(~(p > 0) | (p > 1)):
        raise InputError("sampling probabilities must lie in (0, 1]")
    K = graph_rounds(G.n, epsilon, delta)
    counts = np.array([round_successes(K, p[e], rng_seed, e) for e in range(G.m)])
    return Graph(G.n, zip(G.edges, (G.weights * (counts / (K * p))).tolist()))


def collapse_arrays(G, perm):
    """Per edge/arc ``(s, t, keep)`` of the collapse along ``perm``.

    ``s`` is the lowest-rank tail vertex, ``t`` the highest-rank head vertex;
    ``keep`` is ``rank(s) < rank(t)``. For undirected edges tail == head.
    """
    rank = perm.rank
    if G.directed:
        tails, heads = G.tails, G.heads
    else:
        tails = heads = G.edges
    s = np.array([min(t, key=rank.__getitem__) for t in tails], dtype=np.int64)
    t = np.array([max(h, key=rank.__getitem__) for h in heads], dtype=np.int64)
    keep = rank[s] < rank[t] if len(s) else np.zeros(0, dtype=bool)
    return s, t, keep


def _collapse(G, perm):
    if len(perm) != G.n:
        raise InputError(f"permutation has length {len(perm)}, hypergraph has {G.n} vertices")
    s, t, keep = collapse_arrays(G, perm)
    w = G.weights
    return Graph(G.n, (((s[k], t[k]), w[k]) for k in np.flatnonzero(keep)))


def collapse_undirected(G, perm):
    """Replace each hyperedge by the edge joining its first and last vertex
    under ``perm``; singletons vanish."""
    if G.directed:
        raise InputError("expected an undirected hypergraph")
    return _collapse(G, perm)


def collapse_directed(G, perm):
    """Replace each hyperarc by ``{s, t}`` (first tail vertex, last head
    vertex) when ``s`` precedes ``t``; drop it otherwise."""
    if not G.directed:
        raise InputError("expected a directed hypergraph")
    return _collapse(G, perm)


def collapse(G, perm):
    return _collapse(G, perm)


__all__ = [
    "Graph", "Permutation", "algorithm1", "build_B_pi", "collapse",
    "collapse_arrays", "collapse_directed", "collapse_undirected", "crosses",
    "crossing_degrees", "edge_rng", "graph_rounds", "graph_thresholds",
    "round_successes",
]
