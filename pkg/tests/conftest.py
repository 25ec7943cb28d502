import numpy as np
import pytest
from scipy.optimize import minimize

from hypersparse.core import DirectedHypergraph, UndirectedHypergraph
from hypersparse.graph import Graph

ACCEPTANCE_LINES = []


def random_undirected(rng, n, m, max_size=None, weights=True):
    max_size = max_size or n
    edges = []
    for _ in range(m):
        k = int(rng.integers(1, max_size + 1))
        w = float(rng.uniform(0.1, 3.0)) if weights else 1.0
        edges.append((rng.choice(n, size=k, replace=False), w))
    return UndirectedHypergraph(n, edges)


def random_directed(rng, n, m, max_size=None, overlap=True, weights=True):
    """Random arcs; with ``overlap`` tail and head are drawn independently."""
    max_size = max_size or n
    arcs = []
    for _ in range(m):
        w = float(rng.uniform(0.1, 3.0)) if weights else 1.0
        if overlap:
            a, b = (int(v) for v in rng.integers(1, max_size + 1, size=2))
            arcs.append((rng.choice(n, size=a, replace=False),
                         rng.choice(n, size=b, replace=False), w))
        else:
            a, b = (int(v) for v in rng.integers(1, max(n // 2, 1) + 1, size=2))
            verts = rng.choice(n, size=a + b, replace=False)
            arcs.append((verts[:a], verts[a:], w))
    return DirectedHypergraph(n, arcs)


def random_graph(rng, n, m, connected=False):
    edges = []
    if connected:
        order = rng.permutation(n)
        for k in range(1, n):
            edges.append(((int(order[k]), int(order[rng.integers(0, k)])),
                          float(rng.uniform(0.5, 2.0))))
    for _ in range(m):
        u, v = rng.choice(n, size=2, replace=False)
        edges.append(((int(u), int(v)), float(rng.uniform(0.5, 2.0))))
    return Graph(n, edges)


def qp_resistance(G, s, t):
    """Resistance as a smooth convex QP solved by SLSQP.

    Minimises ``sum_e w_e g_e^2 - 2 (x_s - x_t)`` over ``(x, g)`` with
    ``g_e >= 0`` and ``g_e >= x_u - x_v`` for every tail/head pair of ``e``.
    """
    n, m = G.n, G.m
    pairs = G.arcs if G.directed else [(e, e) for e in G.edges]
    w = np.asarray(G.weights)
    rows = [(n + k, u, v) for k, (T, H) in enumerate(pairs) for u in T for v in H if u != v]
    A = np.zeros((len(rows), n + m))
    for r, (g, u, v) in enumerate(rows):
        A[r, g], A[r, u], A[r, v] = 1.0, -1.0, 1.0
    c = np.zeros(n + m)
    c[s], c[t] = -2.0, 2.0

    def obj(z):
        return w @ z[n:] ** 2 + c @ z

    def jac(z):
        grad = c.copy()
        grad[n:] += 2 * w * z[n:]
        return grad

    res = minimize(obj, np.zeros(n + m), jac=jac, method="SLSQP",
                   constraints=[{"type": "ineq", "fun": lambda z: A @ z, "jac": lambda z: A}],
                   bounds=[(None, None)] * n + [(0, None)] * m,
                   options={"ftol": 1e-15, "maxiter": 2000})
    return -res.fun


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def acceptance_line():
    def record(number, title, passed, detail=""):
        line = f"criterion {number:2d} {'PASS' if passed else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
