from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

from hypersparse.core import Permutation
from hypersparse.errors import InputError
from hypersparse.graph import Graph, crossing_degrees
from hypersparse.order import (
    Status, assemble, build_E, build_J, check_copositive, permutation_matrix,
    reduce_to_copositive,
)


def random_zero_row_sum(rng, n):
    M = rng.standard_normal((n, n))
    A = M + M.T
    A -= np.diag(A.sum(axis=1))
    return A


def test_build_J():
    np.testing.assert_array_equal(build_J(2), [[1, -1]])
    np.testing.assert_array_equal(build_J(3), [[1, -1, 0], [0, 1, -1]])
    for n in range(1, 10):
        assert not (build_J(n) @ np.ones(n)).any()


def test_build_E():
    np.testing.assert_array_equal(build_E(2), [[1, 1], [0, 1]])
    y = np.random.default_rng(0).random(6)
    x = build_E(6) @ y
    assert (np.diff(x) <= 0).all()


@pytest.mark.parametrize("n", [1, 2, 4, 17, 50])
def test_E_inverse_exact(n):
    inv = np.vstack([build_J(n), np.eye(n)[-1]])
    assert np.array_equal(inv @ build_E(n), np.eye(n))


def test_permutation_matrix():
    np.testing.assert_array_equal(permutation_matrix(Permutation.identity(3)), np.eye(3))
    np.testing.assert_array_equal(permutation_matrix(Permutation([1, 0])), [[0, 1], [1, 0]])
    rng = np.random.default_rng(3)
    perm = Permutation(rng.permutation(6))
    P = permutation_matrix(perm)
    np.testing.assert_array_equal(P @ P.T, np.eye(6))
    x = rng.standard_normal(6)
    np.testing.assert_array_equal(P @ x, x[list(perm.order)])


def test_reduce_examples():
    L = np.array([[1.0, -1.0], [-1.0, 1.0]])
    np.testing.assert_allclose(reduce_to_copositive(L, Permutation.identity(2)), [[1.0]])
    np.testing.assert_array_equal(reduce_to_copositive(np.zeros((4, 4)), Permutation.identity(4)),
                                  np.zeros((3, 3)))


def test_reduce_triangle_matches_crossing_degrees():
    G = Graph(3, [((0, 1), 1), ((0, 2), 1), ((1, 2), 1)])
    perm = Permutation.identity(3)
    C = reduce_to_copositive(G.laplacian(), perm)
    E = build_E(3)
    # Independent product oracle, worked by hand: C = [[2, 1], [1, 2]].
    np.testing.assert_allclose(C, (E.T @ G.laplacian() @ E)[:2, :2])
    np.testing.assert_allclose(C, [[2, 1], [1, 2]])
    np.testing.assert_allclose(C, crossing_degrees(G, perm), atol=1e-12)


def test_reduce_preconditions():
    perm = Permutation.identity(2)
    with pytest.raises(InputError, match="not symmetric"):
        reduce_to_copositive([[1, -1], [0, 0]], perm)
    with pytest.raises(InputError, match="A @ 1"):
        reduce_to_copositive([[1, 0], [0, 1]], perm)
    with pytest.raises(InputError):
        reduce_to_copositive(np.zeros((3, 3)), perm)
    with pytest.raises(InputError):
        reduce_to_copositive(np.zeros((2, 3)), perm)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 8), st.integers(0, 2**32 - 1))
def test_round_trip(n, seed):
    rng = np.random.default_rng(seed)
    A = random_zero_row_sum(rng, n)
    perm = Permutation(rng.permutation(n))
    C = reduce_to_copositive(A, perm)
    assert np.linalg.norm(assemble(C, perm) - A) <= 1e-9
    P, J = permutation_matrix(perm), build_J(n)
    np.testing.assert_allclose(P.T @ J.T @ C @ J @ P, A, atol=1e-9)


def test_sufficiency_on_cone():
    rng = np.random.default_rng(11)
    for _ in range(5):
        n = int(rng.integers(2, 8))
        C = rng.random((n - 1, n - 1))
        C = C + C.T
        perm = Permutation(rng.permutation(n))
        A = assemble(C, perm)
        # x in the cone of perm: x(order[i]) nonincreasing in i.
        vals = -np.sort(-rng.standard_normal((10_000, n)), axis=1)
        X = np.empty_like(vals)
        X[:, list(perm.order)] = vals
        assert np.einsum("ij,jk,ik->i", X, A, X).min() >= -1e-9


def test_check_copositive_examples():
    assert check_copositive(np.eye(2)).status is Status.CERTIFIED_NONNEGATIVE
    v = check_copositive([[1, -2], [-2, 1]])
    assert v.status is Status.REFUTED and v.copositive is False
    y = v.witness / v.witness[0]
    np.testing.assert_allclose(y, [1.0, 1.0])
    assert y @ np.array([[1, -2], [-2, 1]]) @ y == pytest.approx(-2)
    v = check_copositive([[2, -1], [-1, 2]])
    assert v.status is Status.CERTIFIED_PSD and v.witness is None


def test_check_copositive_other_routes():
    v = check_copositive([[-1.0, 0.0], [0.0, 1.0]])
    assert v.status is Status.REFUTED and list(v.witness) == [1.0, 0.0]
    # Horn matrix: copositive, neither nonnegative nor PSD.
    H = np.array([[1, -1, 1, 1, -1], [-1, 1, -1, 1, 1], [1, -1, 1, -1, 1],
                  [1, 1, -1, 1, -1], [-1, 1, 1, -1, 1]], dtype=float)
    v = check_copositive(H, refutation_samples=2000)
    assert v.status is Status.INCONCLUSIVE and v.copositive is None
    with pytest.raises(InputError):
        check_copositive([[1, 2], [0, 1]])
    with pytest.raises(InputError):
        check_copositive(np.zeros((2, 3)))


def test_check_copositive_deterministic():
    C = np.array([[1, -1.2, 0.5], [-1.2, 1, 0.3], [0.5, 0.3, 1]])
    a, b = check_copositive(C, rng_seed=4), check_copositive(C, rng_seed=4)
    assert a.status == b.status
    if a.witness is not None:
        np.testing.assert_array_equal(a.witness, b.witness)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_nonnegative_never_refuted(k, seed):
    C = np.random.default_rng(seed).random((k, k))
    assert check_copositive(C + C.T).status is Status.CERTIFIED_NONNEGATIVE


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.integers(0, 2**32 - 1))
def test_refutation_witness_valid(k, seed):
    M = np.random.default_rng(seed).standard_normal((k, k))
    C = M + M.T
    v = check_copositive(C)
    if v.status is Status.REFUTED:
        assert (v.witness >= 0).all() and v.witness @ C @ v.witness < -1e-9
    else:
        assert v.witness is None
