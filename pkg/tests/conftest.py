"""Shared randomized-state helpers for the test suite."""

import numpy as np
import pytest

from qsdbounds import Ensemble, from_vectors


def rand_unit_vector(rng, dim):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def rand_unitary(rng, dim):
    """Haar-distributed unitary via QR with the R-diagonal phase fix."""
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def rand_hermitian(rng, dim):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return 0.5 * (z + z.conj().T)


def rand_mixed_state(rng, dim, rank=None):
    rank = rank or dim
    weights = rng.dirichlet(np.ones(rank))
    rho = np.zeros((dim, dim), dtype=np.complex128)
    for w in weights:
        v = rand_unit_vector(rng, dim)
        rho += w * np.outer(v, v.conj())
    return 0.5 * (rho + rho.conj().T)


def rand_pure_ensemble(rng, dim, n, equal_probs=False):
    probs = np.full(n, 1.0 / n) if equal_probs else rng.dirichlet(np.ones(n))
    vectors = np.array([rand_unit_vector(rng, dim) for _ in range(n)])
    return from_vectors(probs, vectors)


def rand_mixed_ensemble(rng, dim, n):
    probs = rng.dirichlet(np.ones(n))
    states = np.array([rand_mixed_state(rng, dim) for _ in range(n)])
    return Ensemble(probs, states)


def rand_ensemble(rng, dim, n, mixed):
    return rand_mixed_ensemble(rng, dim, n) if mixed else rand_pure_ensemble(rng, dim, n)


@pytest.fixture(scope="session", autouse=True)
def warm_kernel():
    """Compile/load the jit kernel once so timed tests measure steady state."""
    from qsdbounds import make_four_state, optimal_success

    optimal_success(make_four_state(0.3), tol=1e-8, max_iter=50)
