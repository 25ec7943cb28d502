"""Instance generators.

``appendix`` builds the family on which sampling by maximum collapsed
effective resistance keeps every hyperedge: vertices ``s = 0``, ``t = 1`` and
``U = {2, ..., n_U + 1}``, one unit hyperedge ``{s, t} | X`` per ``r``-subset
``X`` of ``U``.
"""
from dataclasses import dataclass
import itertools

import numpy as np

from .core import DirectedHypergraph, UndirectedHypergraph, sort_permutation
from .errors import InputError
from .graph import collapse_undirected
from .solvers import graph_resistance_oracle

KINDS = ("random-uniform", "random-mixed", "complete-graph", "appendix")
APPENDIX_EPS = 0.25


@dataclass(frozen=True)
class GenSpec:
    """Generator parameters.

    For ``appendix``, ``n`` is ``|U|``. ``weight_dist`` is ``"unit"`` or
    ``("uniform", a, b)``. Directed random arcs have disjoint tail and head
    of equal size: ``r`` for ``random-uniform``, drawn per arc from ``1..r``
    for ``random-mixed``. Undirected ``random-mixed`` draws ``|e|`` from
    ``2..r``.
    """

    kind: str
    n: int
    m: int = 0
    r: int = 2
    weight_dist: object = "unit"
    seed: int = 0
    directed: bool = False

    def validate(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown generator kind {self.kind!r}")
        if self.n < 1:
            raise InputError("n must be positive")
        if self.kind.startswith("random"):
            if self.m < 0:
                raise InputError("m must be nonnegative")
            smallest, need = (1, 2 * self.r) if self.directed else (2, self.r)
            if self.r < smallest or need > self.n:
                raise InputError(f"r={self.r} is inconsistent with n={self.n}")
        if self.kind == "appendix" and not 1 <= self.r <= self.n:
            raise InputError(f"appendix needs 1 <= r <= n_U, got r={self.r}, n_U={self.n}")
        if self.kind in ("complete-graph", "appendix") and self.directed:
            raise InputError(f"{self.kind} instances are undirected")
        _weights(self.weight_dist, 0, np.random.default_rng(0))


def _weights(dist, m, rng):
    if dist == "unit":
        return np.ones(m)
    if isinstance(dist, (tuple, list)) and len(dist) == 3 and dist[0] == "uniform":
        a, b = float(dist[1]), float(dist[2])
        if not 0 <= a <= b:
            raise InputError(f"uniform weights need 0 <= a <= b, got ({a}, {b})")
        return rng.uniform(a, b, size=m)
    raise InputError(f"unknown weight distribution {dist!r}")


def complete_graph(n, weight=1.0):
    return UndirectedHypergraph(n, ((e, weight) for e in itertools.combinations(range(n), 2)))


def appendix_instance(n_u, r):
    if not 1 <= r <= n_u:
        raise InputError(f"appendix needs 1 <= r <= n_U, got r={r}, n_U={n_u}")
    U = range(2, n_u + 2)
    return UndirectedHypergraph(
        n_u + 2, (((0, 1) + X, 1.0) for X in itertools.combinations(U, r)))


def _random(spec):
    rng = np.random.default_rng(spec.seed)
    n, r = spec.n, spec.r
    w = _weights(spec.weight_dist, spec.m, rng)
    if not spec.directed:
        edges = []
        for k in range(spec.m):
            size = r if spec.kind == "random-uniform" else int(rng.integers(2, r + 1))
            edges.append((rng.choice(n, size=size, replace=False), w[k]))
        return UndirectedHypergraph(n, edges)
    arcs = []
    for k in range(spec.m):
        size = r if spec.kind == "random-uniform" else int(rng.integers(1, r + 1))
        verts = rng.choice(n, size=2 * size, replace=False)
        arcs.append((verts[:size], verts[size:], w[k]))
    return DirectedHypergraph(n, arcs)


def gen(spec):
    """Build the instance described by ``spec`` (deterministic in ``seed``)."""
    spec.validate()
    if spec.kind == "complete-graph":
        G = complete_graph(spec.n)
        if spec.weight_dist != "unit":
            w = _weights(spec.weight_dist, G.m, np.random.default_rng(spec.seed))
            G = G.reweighted(w)
        return G
    if spec.kind == "appendix":
        return appendix_instance(spec.n, spec.r)
    return _random(spec)


def demo_vector(G, edge_index, s=0, t=1, eps=APPENDIX_EPS):
    """Potential that isolates hyperedge ``edge_index`` between ``s`` and ``t``.

    ``x(s) = 1``, ``x(t) = 0``, ``1 - eps`` on the rest of the edge and
    ``1 + eps`` everywhere else.
    """
    if G.directed:
        raise InputError("expected an undirected hypergraph")
    if not 0 <= edge_index < G.m:
        raise InputError(f"edge index {edge_index} out of range for m={G.m}")
    e = G.edges[edge_index]
    if s not in e or t not in e or s == t:
        raise InputError(f"edge {edge_index} must contain distinct s={s} and t={t}")
    x = np.full(G.n, 1.0 + eps)
    x[list(e)] = 1.0 - eps
    x[s], x[t] = 1.0, 0.0
    return x


def collapsed_resistance(G, edge_index, s=0, t=1, eps=APPENDIX_EPS):
    """Resistance between ``s`` and ``t`` in the collapse of ``G`` along the
    ordering of :func:`demo_vector`; returns ``(value, collapsed_graph)``."""
    x = demo_vector(G, edge_index, s, t, eps)
    Gpi = collapse_undirected(G, sort_permutation(x))
    return graph_resistance_oracle(Gpi, s, t), Gpi


def appendix_demo(n_u, r, e_index):
    """Collapsed resistance of hyperedge ``e_index`` of the appendix instance.

    Always 1: in that collapse ``s`` touches a single edge, the image of the
    chosen hyperedge, so resistance-based probabilities never drop below 1.
    """
    value, _ = collapsed_resistance(appendix_instance(n_u, r), e_index)
    return value


__all__ = [
    "APPENDIX_EPS", "GenSpec", "KINDS", "appendix_demo", "appendix_instance",
    "collapsed_resistance", "complete_graph", "demo_vector", "gen",
]
