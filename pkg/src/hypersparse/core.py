"""Hypergraph data model, Laplacian quadratic forms, cuts and codegrees.

Vertices are dense integer ids ``0..n-1``. Both hypergraph kinds are
immutable; their incidence is also kept in a tail/head CSR layout
(:attr:`UndirectedHypergraph.arrays`) consumed by the numeric kernels. An
undirected hyperedge ``e`` is stored with tail == head == ``e``, which makes
every kernel serve both kinds: ``max_{u in e} x(u) - min_{v in e} x(v)`` is
never negative, so the directed clamp is inert.
"""
from dataclasses import dataclass
from functools import cached_property
import math

import numpy as np

from . import kernels
from .errors import InputError


def _vertex_tuple(vertices, n, what):
    try:
        ids = sorted({int(v) for v in vertices})
    except (TypeError, ValueError):
        raise InputError(f"{what} must be an iterable of integer vertex ids") from None
    if not ids:
        raise InputError(f"{what} must be nonempty")
    if ids[0] < 0 or ids[-1] >= n:
        bad = ids[0] if ids[0] < 0 else ids[-1]
        raise InputError(f"vertex {bad} out of range for n={n}")
    return tuple(ids)


def _weight(value):
    try:
        w = float(value)
    except (TypeError, ValueError):
        raise InputError(f"weight {value!r} is not a real number") from None
    if not math.isfinite(w) or w < 0:
        raise InputError(f"weight must be finite and nonnegative, got {w}")
    return w


def _csr(sets):
    ptr = np.zeros(len(sets) + 1, dtype=np.int64)
    ptr[1:] = np.cumsum([len(s) for s in sets])
    idx = np.fromiter((v for s in sets for v in s), dtype=np.int64, count=int(ptr[-1]))
    return ptr, idx


def _readonly(a):
    a.setflags(write=False)
    return a


def _check_n(n):
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise InputError(f"vertex count must be a nonnegative integer, got {n!r}")
    return int(n)


class UndirectedHypergraph:
    """Weighted undirected hypergraph on vertices ``0..n-1``.

    Args:
        n: number of vertices.
        edges: iterable of ``(vertices, weight)`` pairs.

    Vertex sets are canonicalized to sorted tuples; zero-weight edges are
    dropped. Singleton edges are kept (they contribute nothing to any cut or
    quadratic form, but do count towards :func:`size`).
    """

    directed = False

    def __init__(self, n, edges=()):
        self.n = _check_n(n)
        kept, weights = [], []
        for vertices, weight in edges:
            w = _weight(weight)
            verts = _vertex_tuple(vertices, self.n, "hyperedge")
            if w > 0:
                kept.append(verts)
                weights.append(w)
        self._edges = tuple(kept)
        self._weights = _readonly(np.asarray(weights, dtype=np.float64))

    @property
    def edges(self):
        return self._edges

    @property
    def weights(self):
        return self._weights

    @property
    def m(self):
        return len(self._edges)

    def __len__(self):
        return len(self._edges)

    def __iter__(self):
        return iter(zip(self._edges, self._weights.tolist()))

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (self.n == other.n and self._edges == other._edges
                and np.array_equal(self._weights, other._weights))

    def __hash__(self):
        return hash((type(self).__name__, self.n, self._edges, self._weights.tobytes()))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, m={self.m})"

    @cached_property
    def arrays(self):
        """``(tptr, tidx, hptr, hidx, w)`` kernel layout; tail == head."""
        ptr, idx = _csr(self._edges)
        ptr, idx = _readonly(ptr), _readonly(idx)
        return ptr, idx, ptr, idx, self._weights

    def reweighted(self, weights):
        """Same edges with new weights; edges given weight 0 are dropped."""
        weights = np.asarray(weights, dtype=np.float64)
        if weights.shape != (self.m,):
            raise InputError(f"expected {self.m} weights, got shape {weights.shape}")
        return type(self)(self.n, zip(self._edges, weights.tolist()))


class DirectedHypergraph:
    """Weighted directed hypergraph; each hyperarc is ``(tail, head)``.

    Args:
        n: number of vertices.
        arcs: iterable of ``(tail, head, weight)`` triples. Tail and head must
            be nonempty and may overlap.
    """

    directed = True

    def __init__(self, n, arcs=()):
        self.n = _check_n(n)
        tails, heads, weights = [], [], []
        for tail, head, weight in arcs:
            w = _weight(weight)
            t = _vertex_tuple(tail, self.n, "tail")
            h = _vertex_tuple(head, self.n, "head")
            if w > 0:
                tails.append(t)
                heads.append(h)
                weights.append(w)
        self._tails = tuple(tails)
        self._heads = tuple(heads)
        self._weights = _readonly(np.asarray(weights, dtype=np.float64))

    @property
    def arcs(self):
        return tuple(zip(self._tails, self._heads))

    @property
    def tails(self):
        return self._tails

    @property
    def heads(self):
        return self._heads

    @property
    def weights(self):
        return self._weights

    @property
    def m(self):
        return len(self._tails)

    def __len__(self):
        return len(self._tails)

    def __iter__(self):
        return iter(zip(self._tails, self._heads, self._weights.tolist()))

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (self.n == other.n and self._tails == other._tails
                and self._heads == other._heads
                and np.array_equal(self._weights, other._weights))

    def __hash__(self):
        return hash(("DirectedHypergraph", self.n, self._tails, self._heads,
                     self._weights.tobytes()))

    def __repr__(self):
        return f"DirectedHypergraph(n={self.n}, m={self.m})"

    @cached_property
    def arrays(self):
        tptr, tidx = _csr(self._tails)
        hptr, hidx = _csr(self._heads)
        return (_readonly(tptr), _readonly(tidx), _readonly(hptr),
                _readonly(hidx), self._weights)

    def reweighted(self, weights):
        weights = np.asarray(weights, dtype=np.float64)
        if weights.shape != (self.m,):
            raise InputError(f"expected {self.m} weights, got shape {weights.shape}")
        return DirectedHypergraph(
            self.n, zip(self._tails, self._heads, weights.tolist()))


@dataclass(frozen=True)
class Permutation:
    """An ordering ``order[0], ..., order[n-1]`` of the vertices.

    ``rank[v]`` is the 1-based position of ``v`` in ``order``, so
    ``order[rank[v] - 1] == v``.
    """

    order: tuple

    def __post_init__(self):
        order = tuple(int(v) for v in self.order)
        if sorted(order) != list(range(len(order))):
            raise InputError(f"{order} is not a permutation of 0..{len(order) - 1}")
        object.__setattr__(self, "order", order)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @cached_property
    def rank(self):
        r = np.empty(len(self.order), dtype=np.int64)
        r[list(self.order)] = np.arange(1, len(self.order) + 1)
        return _readonly(r)

    def __len__(self):
        return len(self.order)


@dataclass(frozen=True)
class CodegreeMatrix:
    """Pairwise total weights ``d[u, v]``.

    Undirected: weight of hyperedges containing both ``u`` and ``v``; the
    diagonal holds weighted degrees. Directed: weight of hyperarcs with ``u`` in
    the tail and ``v`` in the head.
    """

    n: int
    d: np.ndarray
    directed: bool


@dataclass(frozen=True)
class Labeling:
    """Known labels ``values[v]`` for a subset of vertices."""

    values: dict

    def validate(self, n):
        for v in self.values:
            if not 0 <= int(v) < n:
                raise InputError(f"label vertex {v} out of range for n={n}")

    def arrays(self, n):
        """``(mask, x)``: boolean mask of labeled vertices and their values."""
        self.validate(n)
        mask = np.zeros(n, dtype=bool)
        x = np.zeros(n)
        for v, val in self.values.items():
            mask[int(v)] = True
            x[int(v)] = float(val)
        return mask, x


def _vector(G, x):
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (G.n,):
        raise InputError(f"expected a vector of length {G.n}, got shape {x.shape}")
    return x


def _expect(G, directed):
    if G.directed != directed:
        kind = "directed" if directed else "undirected"
        raise InputError(f"expected an {kind} hypergraph, got {type(G).__name__}")


def quadratic_form(G, x):
    """``x^T L_G(x)`` for either hypergraph kind."""
    x = _vector(G, x)
    return float(kernels.quad_forms(*G.arrays, x[None, :])[0])


def quadratic_forms(G, X):
    """Row-wise quadratic forms of a ``(k, n)`` batch."""
    X = np.ascontiguousarray(np.atleast_2d(np.asarray(X, dtype=np.float64)))
    if X.shape[1] != G.n:
        raise InputError(f"expected rows of length {G.n}, got shape {X.shape}")
    return kernels.quad_forms(*G.arrays, X)


def quadratic_form_undirected(G, x):
    r"""Sum of ``w(e) * (max_{v in e} x(v) - min_{v in e} x(v))**2``."""
    _expect(G, False)
    return quadratic_form(G, x)


def quadratic_form_directed(G, x):
    """Sum of ``w(e) * ([max_{u in T} x(u) - min_{v in H} x(v)]^+)**2``."""
    _expect(G, True)
    return quadratic_form(G, x)


def _membership(G, S):
    member = np.zeros(G.n, dtype=bool)
    for v in S:
        v = int(v)
        if not 0 <= v < G.n:
            raise InputError(f"vertex {v} out of range for n={G.n}")
        member[v] = True
    return member


def cut_weight(G, S):
    """Total weight of edges/arcs cut by the vertex set ``S``.

    An undirected edge is cut when it meets both ``S`` and its complement; a
    hyperarc is cut when its tail meets ``S`` and its head meets the
    complement.
    """
    member = _membership(G, S)
    tptr, tidx, hptr, hidx, w = G.arrays
    if w.size == 0:
        return 0.0
    tail_in = np.logical_or.reduceat(member[tidx], tptr[:-1])
    head_out = np.logical_or.reduceat(~member[hidx], hptr[:-1])
    return float(w[tail_in & head_out].sum())


def cut_weight_undirected(G, S):
    _expect(G, False)
    return cut_weight(G, S)


def cut_weight_directed(G, S):
    _expect(G, True)
    return cut_weight(G, S)


def codegree(G):
    d = kernels.codegree(G.n, *G.arrays)
    return CodegreeMatrix(G.n, _readonly(d), G.directed)


def codegree_undirected(G):
    _expect(G, False)
    return codegree(G)


def codegree_directed(G):
    _expect(G, True)
    return codegree(G)


def size(G):
    """Sum of ``|e|`` (undirected) or ``|T_e| + |H_e|`` (directed)."""
    if G.directed:
        return sum(len(t) + len(h) for t, h in G.arcs)
    return sum(len(e) for e in G.edges)


def sort_permutation(x):
    """Permutation listing vertices by nonincreasing ``x``, ties by id."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1:
        raise InputError("expected a 1-d vector")
    return Permutation(tuple(np.argsort(-x, kind="stable").tolist()))


def indicator(n, S):
    x = np.zeros(n)
    x[list(S)] = 1.0
    return x


def in_cone(x, perm, tol=0.0):
    """True when ``x`` is nonincreasing along ``perm``."""
    vals = np.asarray(x, dtype=np.float64)[list(perm.order)]
    return bool(np.all(vals[:-1] >= vals[1:] - tol))
