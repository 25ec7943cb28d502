import itertools
import json
import math

import numpy as np
import pytest

from hypersparse.core import (
    DirectedHypergraph, Permutation, UndirectedHypergraph, cut_weight, indicator,
    quadratic_forms,
)
from hypersparse.errors import InputError, RefusalError
from hypersparse.gen import GenSpec, gen
from hypersparse.graph import collapse, crossing_degrees
from hypersparse.sparsify import sparsify
from hypersparse.verify import (
    all_cut_values, certificate_check_all_permutations, chernoff_bound,
    concentration_selftest, cut_check_exhaustive, resistance_check, spectral_check_random,
)

from conftest import random_directed, random_undirected

EDGE = UndirectedHypergraph(2, [((0, 1), 1.0)])
EDGE_105 = UndirectedHypergraph(2, [((0, 1), 1.05)])


def certificate_oracle(G, H, eps):
    """Per-ordering crossing-degree comparison through the graph module."""
    for order in itertools.permutations(range(G.n)):
        perm = Permutation(order)
        dg = crossing_degrees(collapse(G, perm), perm)
        dh = crossing_degrees(collapse(H, perm), perm)
        slack = 1e-9 * np.maximum(np.maximum(dg, dh), 1.0)
        if ((dg > (1 + eps) * dh + slack) | (dg < (1 - eps) * dh - slack)).any():
            return False
    return True


def test_all_cut_values_bitmask_order(rng):
    G = random_directed(rng, 5, 8)
    values = all_cut_values(G)
    for s in range(32):
        S = [v for v in range(5) if s >> v & 1]
        assert values[s] == pytest.approx(cut_weight(G, S), rel=1e-12, abs=1e-12)


def test_cut_check_examples(rng):
    G = random_undirected(rng, 6, 10)
    rep = cut_check_exhaustive(G, G, 0.0)
    assert rep.passed and rep.witness is None and rep.checks_run == 64
    rep = cut_check_exhaustive(G, UndirectedHypergraph(6), 0.5)
    assert not rep.passed and isinstance(rep.witness, frozenset)
    assert cut_weight(G, rep.witness) > 0
    rep = cut_check_exhaustive(EDGE, EDGE_105, 0.1)
    assert rep.passed and rep.worst_ratio_low == pytest.approx(1 / 1.05)


def test_cut_check_first_witness_in_bitmask_order():
    G = UndirectedHypergraph(3, [((0, 1), 1.0), ((1, 2), 1.0)])
    H = UndirectedHypergraph(3, [((0, 1), 1.0), ((1, 2), 3.0)])
    rep = cut_check_exhaustive(G, H, 0.1)
    # Subset {0} (mask 1) cuts only {0,1}; mask 2 = {1} is the first violation.
    assert rep.witness == frozenset({1})


def test_guards_and_kinds():
    big = UndirectedHypergraph(23)
    with pytest.raises(RefusalError):
        cut_check_exhaustive(big, big, 0.1)
    nine = UndirectedHypergraph(9)
    with pytest.raises(RefusalError):
        certificate_check_all_permutations(nine, nine, 0.1)
    with pytest.raises(InputError):
        cut_check_exhaustive(EDGE, DirectedHypergraph(2), 0.1)
    with pytest.raises(InputError):
        spectral_check_random(EDGE, UndirectedHypergraph(3), 0.1)


def test_spectral_check_examples(rng):
    G = random_directed(rng, 6, 12)
    assert spectral_check_random(G, G, 0.0).passed
    eps = 0.1
    scaled = G.reweighted(np.asarray(G.weights) * (1 + 3 * eps))
    rep = spectral_check_random(G, scaled, eps)
    assert not rep.passed and rep.witness.shape == (6,)
    rep = spectral_check_random(EDGE, EDGE_105, 0.1, trials=200)
    assert rep.passed and rep.checks_run == 2 * 200 + 2
    assert rep.worst_ratio_low == pytest.approx(rep.worst_ratio_high) == pytest.approx(1 / 1.05)


def test_certificate_examples(rng):
    G = random_undirected(rng, 5, 8)
    assert certificate_check_all_permutations(G, G, 0.0).passed
    # Edge {0,2} is the sole crosser of both positions under orderings that
    # put its endpoints first and last: boosting it must fail somewhere.
    eps = 0.2
    G = UndirectedHypergraph(3, [((0, 2), 1.0), ((0, 1), 1.0)])
    H = UndirectedHypergraph(3, [((0, 2), 1.0 + 2 * eps), ((0, 1), 1.0)])
    rep = certificate_check_all_permutations(G, H, eps)
    assert not rep.passed
    order, i, j = rep.witness
    perm = Permutation(order)
    dg = crossing_degrees(collapse(G, perm), perm)[i - 1, j - 1]
    dh = crossing_degrees(collapse(H, perm), perm)[i - 1, j - 1]
    assert not (1 - eps) * dh <= dg <= (1 + eps) * dh


def test_certificate_trivial_sizes():
    assert certificate_check_all_permutations(UndirectedHypergraph(1), UndirectedHypergraph(1),
                                              0.1).passed


@pytest.mark.parametrize("directed", [False, True])
def test_certificate_matches_oracle(directed):
    rng = np.random.default_rng(17 + directed)
    for _ in range(6):
        n = int(rng.integers(2, 6))
        G = (random_directed if directed else random_undirected)(rng, n, 8)
        H = G.reweighted(np.asarray(G.weights) * rng.uniform(0.85, 1.15, G.m))
        for eps in (0.05, 0.2):
            rep = certificate_check_all_permutations(G, H, eps)
            assert rep.passed == certificate_oracle(G, H, eps)
            assert rep.checks_run == math.factorial(n) * n * (n - 1) // 2


@pytest.mark.parametrize("directed", [False, True])
def test_soundness_chain(directed):
    passed = 0
    for seed in range(8):
        kind = "random-mixed" if directed else "random-uniform"
        G = gen(GenSpec(kind, 6, 60, 2 if directed else 3, seed=seed, directed=directed))
        H, _ = sparsify(G, 0.4, seed, delta=0.2)
        if certificate_check_all_permutations(G, H, 0.4).passed:
            passed += 1
            assert cut_check_exhaustive(G, H, 0.4).passed
            assert spectral_check_random(G, H, 0.4, trials=300, rng_seed=seed).passed
    assert passed > 0


def test_cut_check_agrees_with_indicator_forms(rng):
    G = random_directed(rng, 5, 10)
    H = G.reweighted(np.asarray(G.weights) * rng.uniform(0.7, 1.3, G.m))
    X = np.array([indicator(5, [v for v in range(5) if s >> v & 1]) for s in range(32)])
    np.testing.assert_array_equal(quadratic_forms(G, X), all_cut_values(G))
    g, h = quadratic_forms(G, X), quadratic_forms(H, X)
    slack = 1e-9 * np.maximum(np.maximum(g, h), 1)
    expected = not ((g > 1.2 * h + slack) | (g < 0.8 * h - slack)).any()
    assert cut_check_exhaustive(G, H, 0.2).passed == expected


def test_reports_deterministic(rng):
    G = random_undirected(rng, 6, 10)
    H = G.reweighted(np.asarray(G.weights) * rng.uniform(0.5, 1.5, G.m))
    a = spectral_check_random(G, H, 0.2, rng_seed=3).to_dict()
    b = spectral_check_random(G, H, 0.2, rng_seed=3).to_dict()
    assert a == b


def test_resistance_check_examples():
    path = UndirectedHypergraph(3, [((0, 1), 1.0), ((1, 2), 1.0)])
    assert resistance_check(path, path, 0.0, [(0, 2), (0, 1)]).passed
    heavier = path.reweighted([1.05, 1.05])
    rep = resistance_check(path, heavier, 0.1, [(0, 2)])
    assert rep.passed and rep.worst_ratio_low == pytest.approx(1.05, rel=1e-3)
    broken = UndirectedHypergraph(3, [((0, 1), 1.0)])
    rep = resistance_check(path, broken, 0.1, [(0, 2)])
    assert not rep.passed and rep.witness == (0, 2)
    assert rep.details["resistances"][0]["R_H"] is None
    # Unreachable in both: consistent, so it passes.
    D = DirectedHypergraph(2, [((0,), (1,), 1.0)])
    assert resistance_check(D, D, 0.1, [(1, 0)]).passed


def test_chernoff_bound_monotone():
    values = [chernoff_bound(K, 0.3) for K in (50, 100, 200)]
    assert values[0] > values[1] > values[2]
    assert chernoff_bound(300, 0.3) == pytest.approx(2 * math.exp(-0.09 * 100))


def test_concentration_selftest():
    rep = concentration_selftest(300, 0.5, 10_000, rng_seed=0)
    assert rep.passed and rep.witness is None
    assert rep.details["frequency"] <= rep.details["limit"]
    rep = concentration_selftest(1, 1.0, 100)
    assert rep.passed and rep.details["frequency"] == 0.0
    assert rep.worst_ratio_low == rep.worst_ratio_high == 1.0
    with pytest.raises(InputError):
        concentration_selftest(0, 0.5, 10)


def test_report_to_dict_json_safe():
    rep = cut_check_exhaustive(EDGE, UndirectedHypergraph(2), 0.1)
    d = rep.to_dict()
    json.dumps(d)
    assert d["passed"] is False and d["witness"] in ([0], [1])
    assert d["worst_ratio_low"] is None
