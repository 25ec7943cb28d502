"""Spectral sparsification of hypergraphs by codegree sampling.

Each hyperedge is sampled with probability ``w(e) / min d(u, v)``, the
minimum running over vertex pairs of ``e`` (directed: tail x head), for ``K``
rounds; kept copies are reweighted by ``1 / (K p_e)``. Summed over all edges
these probabilities stay below ``n(n-1)/2`` (undirected), so the expected
output size is ``O(K n^2)`` regardless of ``m``.
"""
from dataclasses import asdict, dataclass
import math

import numpy as np

from . import kernels
from .core import codegree
from .errors import InputError
from .graph import _check_eps_delta, edge_rng, round_successes


@dataclass(frozen=True)
class SamplingPlan:
    """Sampling probabilities and round count for :func:`algorithm2`.

    ``active`` marks the edges that are actually sampled; the rest (singleton
    hyperedges, arcs ``({v}, {v})``) are inert and copied unchanged. Inert
    edges carry probability 1 and are left out of :attr:`sum_p`.
    """

    probabilities: np.ndarray
    active: np.ndarray
    K: int
    epsilon: float
    delta: float

    @property
    def sum_p(self):
        return float(self.probabilities[self.active].sum())


@dataclass(frozen=True)
class SparsifyReport:
    retained_count: int
    expected_retained: float
    K: int
    sum_p: float
    seed: int
    input_count: int = 0
    epsilon: float = None
    delta: float = None

    def to_dict(self):
        return asdict(self)


def inert_mask(G):
    """Edges that contribute zero to every cut and quadratic form."""
    if G.directed:
        return np.array([len(t) == 1 and t == h for t, h in G.arcs], dtype=bool)
    return np.array([len(e) == 1 for e in G.edges], dtype=bool)


def _probabilities(G, include_diagonal):
    d = codegree(G).d
    tptr, tidx, hptr, hidx, w = G.arrays
    mins = kernels.min_pair_codegree(tptr, tidx, hptr, hidx, d, include_diagonal)
    # singleton hyperedges have no pair; they are inert and kept as-is
    return np.where(np.isinf(mins), 1.0, w / np.where(np.isinf(mins), 1.0, mins))


def sampling_probs_undirected(G):
    """``w(e) / min_{u != v in e} d_G(u, v)`` per hyperedge (1 for singletons)."""
    if G.directed:
        raise InputError("expected an undirected hypergraph")
    return _probabilities(G, include_diagonal=False)


def sampling_probs_directed(G):
    """``w(e) / min_{u in T, v in H} d_G(u, v)`` per hyperarc.

    Pairs with ``u == v`` take part when tail and head overlap.
    """
    if not G.directed:
        raise InputError("expected a directed hypergraph")
    return _probabilities(G, include_diagonal=True)


def log_factorial(n):
    return math.fsum(math.log(k) for k in range(2, n + 1))


def rounds_for(n, epsilon, delta):
    """``K = ceil(3 (ln 2 + ln C(n,2) + ln n! + ln(1/delta)) / epsilon^2)``.

    The smallest round count for which the Chernoff tail ``2 exp(-eps^2 K/3)``
    survives a union bound over all vertex-position pairs and all orderings.
    """
    _check_eps_delta(epsilon, delta)
    pairs = max(math.comb(n, 2), 1)
    total = math.log(2.0) + math.log(pairs) + log_factorial(n) - math.log(delta)
    return max(1, math.ceil(3.0 * total / epsilon**2))


def make_plan(G, epsilon, delta):
    p = _probabilities(G, include_diagonal=G.directed)
    live = ~inert_mask(G)
    p[~live] = 1.0
    return SamplingPlan(p, live, rounds_for(G.n, epsilon, delta), float(epsilon), float(delta))


def _check_plan(G, plan):
    p = np.asarray(plan.probabilities, dtype=np.float64)
    if p.shape != (G.m,) or np.shape(plan.active) != (G.m,):
        raise InputError(f"plan covers {p.shape[0]} edges, hypergraph has {G.m}")
    if np.any(~(p > 0) | (p > 1)):
        raise InputError("sampling probabilities must lie in (0, 1]")
    if int(plan.K) < 1:
        raise InputError("K must be at least 1")
    return p


def success_counts(plan, rng_seed, method="binomial"):
    """Per-edge success counts ``X_e`` over ``plan.K`` rounds.

    ``method="loop"`` draws the ``K`` Bernoulli rounds explicitly;
    ``"binomial"`` draws ``X_e ~ Binomial(K, p_e)`` directly. Both use the
    per-edge stream :func:`~hypersparse.graph.edge_rng`, so results do not
    depend on the order in which edges are processed. Inert edges get ``K``.
    """
    K = int(plan.K)
    counts = np.full(len(plan.probabilities), K, dtype=np.int64)
    for e in np.flatnonzero(plan.active):
        p = float(plan.probabilities[e])
        if method == "loop":
            counts[e] = round_successes(K, p, rng_seed, e)
        elif method == "binomial":
            counts[e] = edge_rng(rng_seed, e).binomial(K, p)
        else:
            raise InputError(f"unknown sampling method {method!r}")
    return counts


def algorithm2(G, plan, rng_seed, method="loop"):
    """Sample ``G`` according to ``plan``; returns ``(H, report)``.

    ``w_H(e) = w_G(e) X_e / (K p_e)``; edges never sampled are omitted.
    """
    p = _check_plan(G, plan)
    K = int(plan.K)
    counts = success_counts(plan, rng_seed, method)
    factor = counts / (K * p)
    H = G.reweighted(G.weights * factor)
    report = SparsifyReport(
        retained_count=H.m,
        expected_retained=K * plan.sum_p,
        K=K,
        sum_p=plan.sum_p,
        seed=int(rng_seed),
        input_count=G.m,
        epsilon=plan.epsilon,
        delta=plan.delta,
    )
    return H, report


def sparsify(G, epsilon, rng_seed=0, delta=None):
    """Return an ``epsilon`` spectral sparsifier of ``G`` and a report.

    Uses exact codegree probabilities, ``delta = 1/(2n)`` unless given, and the
    binomial shortcut for the ``K`` sampling rounds. The guarantee holds with
    probability ``1 - delta``.
    """
    if not 0.0 < epsilon < 1.0:
        raise InputError(f"epsilon must lie in (0, 1), got {epsilon}")
    if delta is None:
        delta = 1.0 / (2 * max(G.n, 1))
    plan = make_plan(G, epsilon, delta)
    return algorithm2(G, plan, rng_seed, method="binomial")


__all__ = [
    "SamplingPlan", "SparsifyReport", "algorithm2", "inert_mask",
    "log_factorial", "make_plan", "rounds_for", "sampling_probs_directed",
    "sampling_probs_undirected", "sparsify", "success_counts",
]
