import itertools
import math

import pytest

from hypersparse.errors import InputError
from hypersparse.gen import (
    GenSpec, appendix_demo, appendix_instance, collapsed_resistance, complete_graph,
    demo_vector, gen,
)
from hypersparse.sparsify import make_plan


@pytest.mark.parametrize("n_u, r", [(4, 2), (3, 1), (5, 2), (5, 3)])
def test_appendix_instance_shape(n_u, r):
    G = gen(GenSpec("appendix", n_u, r=r))
    assert G.n == n_u + 2 and G.m == math.comb(n_u, r)
    assert all(len(e) == r + 2 and e[:2] == (0, 1) for e in G.edges)
    assert (G.weights == 1).all()
    assert {e[2:] for e in G.edges} == set(itertools.combinations(range(2, n_u + 2), r))


def test_complete_graph():
    G = gen(GenSpec("complete-graph", 5))
    assert G.m == 10 and set(G.edges) == set(itertools.combinations(range(5), 2))
    W = gen(GenSpec("complete-graph", 5, weight_dist=("uniform", 1, 2), seed=3))
    assert W.edges == G.edges and ((W.weights >= 1) & (W.weights <= 2)).all()
    assert complete_graph(4, weight=2.0).weights.sum() == 12


def test_random_uniform_reproducible():
    spec = GenSpec("random-uniform", 7, 150, 3, seed=11)
    a, b = gen(spec), gen(spec)
    assert a == b and a.m == 150
    assert all(len(e) == 3 for e in a.edges)
    assert gen(GenSpec("random-uniform", 7, 150, 3, seed=12)) != a


def test_random_mixed_sizes():
    G = gen(GenSpec("random-mixed", 8, 300, 4, seed=1))
    assert {len(e) for e in G.edges} == {2, 3, 4}
    D = gen(GenSpec("random-mixed", 7, 300, 2, seed=1, directed=True))
    assert {(len(t), len(h)) for t, h in D.arcs} == {(1, 1), (2, 2)}
    assert all(not set(t) & set(h) for t, h in D.arcs)
    U = gen(GenSpec("random-uniform", 6, 40, 3, seed=2, directed=True))
    assert all(len(t) == len(h) == 3 and not set(t) & set(h) for t, h in U.arcs)


def test_weight_distribution():
    G = gen(GenSpec("random-uniform", 6, 100, 2, weight_dist=("uniform", 0.5, 1.5), seed=4))
    assert G.weights.min() >= 0.5 and G.weights.max() <= 1.5 and G.weights.std() > 0.1


@pytest.mark.parametrize("spec", [
    GenSpec("nope", 5),
    GenSpec("random-uniform", 0, 5),
    GenSpec("random-uniform", 5, -1, 2),
    GenSpec("random-uniform", 3, 5, 4),
    GenSpec("random-uniform", 5, 5, 1),
    GenSpec("random-uniform", 5, 5, 3, directed=True),
    GenSpec("random-uniform", 5, 5, 2, weight_dist=("uniform", 2, 1)),
    GenSpec("random-uniform", 5, 5, 2, weight_dist="gauss"),
    GenSpec("appendix", 3, r=4),
    GenSpec("complete-graph", 4, directed=True),
])
def test_invalid_specs(spec):
    with pytest.raises(InputError):
        gen(spec)


@pytest.mark.parametrize("n_u, r", [(4, 2), (3, 1), (5, 2)])
def test_appendix_demo_is_one(n_u, r):
    for k in range(math.comb(n_u, r)):
        assert appendix_demo(n_u, r, k) == pytest.approx(1.0, abs=1e-9)


def test_collapse_isolates_the_chosen_edge():
    G = appendix_instance(5, 2)
    for k in range(G.m):
        _, Gpi = collapsed_resistance(G, k)
        at_s = [e for e in Gpi.edges if 0 in e]
        assert len(at_s) == 1


def test_demo_vector():
    G = appendix_instance(4, 2)
    x = demo_vector(G, 0)
    e = G.edges[0]
    assert x[0] == 1.0 and x[1] == 0.0
    assert all(x[v] == 0.75 for v in e[2:])
    assert all(x[v] == 1.25 for v in range(2, 6) if v not in e)
    with pytest.raises(InputError):
        demo_vector(G, 99)
    with pytest.raises(InputError):
        demo_vector(G, 0, s=2, t=5)


def test_appendix_sum_p_contrast():
    for n_u in (4, 5):
        G = appendix_instance(n_u, 2)
        sum_p = make_plan(G, 0.5, 0.5).sum_p
        # The pair X = e minus {s, t} lies in no other edge, so p_e = 1.
        assert sum_p == G.m == math.comb(n_u, 2)
        assert sum_p <= math.comb(G.n, 2)


def test_generators_deterministic():
    for spec in (GenSpec("random-mixed", 6, 30, 3, seed=5), GenSpec("appendix", 4, r=2),
                 GenSpec("random-mixed", 6, 30, 2, seed=5, directed=True)):
        assert gen(spec) == gen(spec)
