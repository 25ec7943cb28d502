"""Copositivity machinery for quadratic forms restricted to a monotone cone.

A symmetric ``A`` with ``A @ 1 == 0`` is nonnegative on every vector that is
nonincreasing along a permutation ``pi`` iff ``A = P^T J^T C J P`` for a
copositive ``C``. This module builds the matrices involved, extracts ``C``
from ``A`` and offers a (necessarily incomplete) copositivity test.
"""
from dataclasses import dataclass
import enum

import numpy as np

from .core import Permutation
from .errors import InputError

SYMMETRY_TOL = 1e-9
NONNEG_TOL = 1e-12
PSD_TOL = 1e-9
REFUTE_TOL = 1e-9


class Status(str, enum.Enum):
    CERTIFIED_NONNEGATIVE = "certified-nonnegative"
    CERTIFIED_PSD = "certified-psd"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CopositivityVerdict:
    status: Status
    witness: np.ndarray = None

    @property
    def copositive(self):
        """True/False when decided, None when inconclusive."""
        if self.status is Status.INCONCLUSIVE:
            return None
        return self.status is not Status.REFUTED


def build_J(n):
    """``(n-1) x n`` difference matrix: ``(J x)(i) = x(i) - x(i+1)``."""
    if n < 1:
        raise InputError("n must be positive")
    J = np.zeros((n - 1, n))
    i = np.arange(n - 1)
    J[i, i] = 1.0
    J[i, i + 1] = -1.0
    return J


def build_E(n):
    """Upper-triangular all-ones matrix; maps the orthant onto the id cone."""
    if n < 1:
        raise InputError("n must be positive")
    return np.triu(np.ones((n, n)))


def permutation_matrix(perm):
    """``P`` with ``(P x)(i) = x(order[i])``."""
    n = len(perm)
    P = np.zeros((n, n))
    P[np.arange(n), list(perm.order)] = 1.0
    return P


def _square(A, name="matrix"):
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise InputError(f"{name} must be square, got shape {A.shape}")
    return A


def reduce_to_copositive(A, perm):
    """Return ``C`` such that ``A == P^T J^T C J P``.

    ``C`` is the leading ``(n-1) x (n-1)`` block of ``E^T P A P^T E``. ``A``
    is nonnegative on the cone of ``perm`` iff ``C`` is copositive.

    Raises:
        InputError: ``A`` is not symmetric, ``A @ 1 != 0``, or the sizes of
            ``A`` and ``perm`` disagree.
    """
    A = _square(A)
    n = A.shape[0]
    if len(perm) != n:
        raise InputError(f"permutation has length {len(perm)}, matrix is {n}x{n}")
    scale = max(1.0, float(np.abs(A).max(initial=0.0)))
    if np.abs(A - A.T).max(initial=0.0) > SYMMETRY_TOL * scale:
        raise InputError("precondition failed: A is not symmetric")
    if np.abs(A.sum(axis=1)).max(initial=0.0) > SYMMETRY_TOL * scale * n:
        raise InputError("precondition failed: A @ 1 != 0")
    P = permutation_matrix(perm)
    E = build_E(n)
    T = E.T @ (P @ A @ P.T) @ E
    border = max(np.abs(T[-1]).max(), np.abs(T[:, -1]).max())
    if border > SYMMETRY_TOL * scale * n * n:
        raise InputError("precondition failed: last row/column of E^T A E is nonzero")
    return T[:-1, :-1].copy()


def assemble(C, perm):
    """Inverse of :func:`reduce_to_copositive`: ``P^T J^T C J P``."""
    C = _square(C)
    n = C.shape[0] + 1
    if len(perm) != n:
        raise InputError(f"permutation has length {len(perm)}, expected {n}")
    JP = build_J(n) @ permutation_matrix(perm)
    return JP.T @ C @ JP


def _pair_witness(C):
    # closed-form minimiser over each 2x2 principal block with a, c >= 0, b < 0
    k = C.shape[0]
    diag = np.diag(C)
    for i in range(k):
        for j in range(i + 1, k):
            a, b, c = diag[i], C[i, j], diag[j]
            if b >= 0 or a < 0 or c < 0:
                continue
            y = np.zeros(k)
            y[i], y[j] = np.sqrt(c), np.sqrt(a)
            if not y.any():
                y[i] = y[j] = 1.0
            if y @ C @ y < -REFUTE_TOL:
                return y
    return None


def check_copositive(C, refutation_samples=1000, rng_seed=0):
    """Try to decide whether ``C`` is copositive.

    Certifies through entrywise nonnegativity or positive semidefiniteness,
    then searches for a nonnegative ``y`` with ``y^T C y < 0`` among basis
    vectors, 2x2 principal blocks, the barycenter and ``refutation_samples``
    uniform points of the simplex. Reports inconclusive if all of that fails.
    """
    C = _square(C)
    if np.abs(C - C.T).max(initial=0.0) > SYMMETRY_TOL * max(1.0, np.abs(C).max(initial=0.0)):
        raise InputError("matrix is not symmetric")
    k = C.shape[0]
    if k == 0 or C.min() >= -NONNEG_TOL:
        return CopositivityVerdict(Status.CERTIFIED_NONNEGATIVE)
    if np.linalg.eigvalsh((C + C.T) / 2).min() >= -PSD_TOL:
        return CopositivityVerdict(Status.CERTIFIED_PSD)
    neg = np.flatnonzero(np.diag(C) < -REFUTE_TOL)
    if neg.size:
        y = np.zeros(k)
        y[neg[0]] = 1.0
        return CopositivityVerdict(Status.REFUTED, y)
    y = _pair_witness(C)
    if y is not None:
        return CopositivityVerdict(Status.REFUTED, y)
    rng = np.random.default_rng(rng_seed)
    Y = np.vstack([np.full(k, 1.0 / k), rng.dirichlet(np.ones(k), size=refutation_samples)])
    vals = np.einsum("ij,jk,ik->i", Y, C, Y)
    hit = np.flatnonzero(vals < -REFUTE_TOL)
    if hit.size:
        return CopositivityVerdict(Status.REFUTED, Y[hit[0]])
    return CopositivityVerdict(Status.INCONCLUSIVE)


__all__ = [
    "CopositivityVerdict", "Permutation", "Status", "assemble", "build_E",
    "build_J", "check_copositive", "permutation_matrix", "reduce_to_copositive",
]
