"""Certified numerical oracle for the optimal discrimination probability.

The optimum is the value of a small semidefinite program. Rather than a
general-purpose interior-point solver, a fixed-point primal iteration runs
together with a shift-certificate dual (see ``_kernels``): the dual value
``Tr Y`` with ``Y >= p_x rho_x`` for all x upper-bounds the optimum
unconditionally, so correctness rests on the certificate, not on iteration
quality. The reported primal is always the value of an explicitly feasible
POVM; non-convergence within the iteration budget is a flagged result with
the bracket still valid, never an error.

The conditional min-entropy of the label given the system equals
``-log2`` of the optimal success probability for labeled mixtures, which is
how :func:`min_entropy_cond` computes it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _kernels
from .bounds import Povm, success_probability
from .ensemble import Ensemble
from .entropy import profile
from .hermitian import RANK_CUTOFF, hermitize

DEFAULT_TOL = 1e-8
DEFAULT_MAX_ITER = 10000


@dataclass(frozen=True)
class OracleResult:
    """Primal/dual bracket for the optimal success probability.

    ``primal`` is achieved by ``povm`` (explicitly feasible: PSD elements
    summing to the identity); ``certificate`` is the dual-feasible operator Y
    with ``Y >= p_x rho_x`` for every x and ``dual = Tr Y``. ``converged`` is
    False when the iteration budget ran out before the gap reached the
    requested tolerance; the bracket is valid either way.
    """

    primal: float
    dual: float
    gap: float
    iterations: int
    converged: bool
    povm: Povm
    certificate: np.ndarray


class MinEntropyEstimate(NamedTuple):
    """Conditional min-entropy in bits with a half-width from the oracle gap."""

    bits: float
    half_width: float


class MonotonicityCheck(NamedTuple):
    """Min-entropy vs von Neumann conditional entropy comparison."""

    s_min: float
    s_cond: float
    holds: bool


def _certify(gs: np.ndarray, elements: np.ndarray) -> tuple[float, np.ndarray]:
    """Dual value and certificate Y built from a POVM iterate."""
    d = gs.shape[1]
    yhat = hermitize(np.einsum("xij,xjk->ik", gs, elements))
    lam_star = max(
        float(np.linalg.eigvalsh(gs[x] - yhat)[-1]) for x in range(gs.shape[0])
    )
    y = yhat + max(lam_star, 0.0) * np.eye(d)
    return float(np.real(np.trace(y))), y


def _repair(elements: np.ndarray) -> np.ndarray:
    """Project an approximate POVM onto exact feasibility.

    Eigenvalue-clip each element to PSD, then apply the congruence
    S^{-1/2} M_x S^{-1/2} with S the element sum; congruence preserves
    positivity and restores completeness to machine precision.
    """
    n, d, _ = elements.shape
    out = np.empty_like(elements)
    for x in range(n):
        w, v = np.linalg.eigh(hermitize(elements[x]))
        out[x] = (v * np.maximum(w, 0.0)) @ v.conj().T
    s = hermitize(out.sum(axis=0))
    w, v = np.linalg.eigh(s)
    s_invsqrt = (v * (1.0 / np.sqrt(w))) @ v.conj().T
    for x in range(n):
        out[x] = hermitize(s_invsqrt @ out[x] @ s_invsqrt)
    return out


def optimal_success(
    e: Ensemble, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> OracleResult:
    """Bracket the optimal success probability of discriminating ``e``.

    Runs the fixed-point iteration until the duality gap falls below ``tol``
    or ``max_iter`` sweeps elapse, then re-certifies the result in plain
    numpy: the returned POVM is repaired to exact feasibility, its value is
    re-evaluated, and the dual certificate is rebuilt from the repaired
    iterate. If the iterate underperforms the trivial guess-the-most-likely
    strategy (possible when the gap tolerance is loose), that strategy's POVM
    is returned instead, so ``primal >= max_x p_x`` always holds.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter!r}")
    gs = np.ascontiguousarray(e.probs[:, None, None] * e.states)
    raw, _, _, iterations = _kernels.jrf_solve(gs, float(tol), int(max_iter), RANK_CUTOFF)

    elements = _repair(raw)
    primal = success_probability(e, elements)
    dual, certificate = _certify(gs, elements)

    best = int(np.argmax(e.probs))
    if primal < e.probs[best]:
        elements = np.zeros_like(elements)
        elements[best] = np.eye(e.dim, dtype=np.complex128)
        primal = float(e.probs[best])

    gap = dual - primal
    povm = Povm(elements, np.eye(e.dim, dtype=np.complex128))
    return OracleResult(
        primal=primal,
        dual=dual,
        gap=gap,
        iterations=iterations,
        converged=bool(gap <= tol or iterations < max_iter),
        povm=povm,
        certificate=certificate,
    )


def min_entropy_cond(
    e: Ensemble, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> MinEntropyEstimate:
    """Conditional min-entropy of the label given the system, in bits.

    Computed as -log2 of the midpoint of the oracle bracket, with half-width
    log2(dual/primal)/2 covering the residual gap.
    """
    res = optimal_success(e, tol, max_iter)
    mid = 0.5 * (res.primal + res.dual)
    half = 0.5 * float(np.log2(res.dual / res.primal))
    return MinEntropyEstimate(float(-np.log2(mid)), half)


def check_monotonicity(
    e: Ensemble, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> MonotonicityCheck:
    """Verify the min-entropy never exceeds the conditional von Neumann entropy.

    Equality holds for perfectly distinguishable or identical members; the
    inequality is what makes the entropic bound a true lower bound.
    """
    s_min = min_entropy_cond(e, tol, max_iter).bits
    s_cond = profile(e).cond
    return MonotonicityCheck(s_min, s_cond, bool(s_min <= s_cond + 1e-6))
