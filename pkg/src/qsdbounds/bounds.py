"""Competing lower bounds on the optimal discrimination probability.

Three bounds are implemented next to the entropic one:

* the square-root measurement bound, with the POVM
  ``pi_x = p_x rho^{-1/2} rho_x rho^{-1/2}`` built from the average state
  (inverse square root taken on the support of rho);
* the pairwise-overlap bound
  ``sum_i p_i^2 / sum_j p_j |<psi_i|psi_j>|^2`` for pure-state ensembles;
* the exact two-state optimum ``(1 + ||p_1 rho_1 - p_2 rho_2||_1) / 2``,
  the only closed-form optimum available, used to cross-check the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ensemble import Ensemble, average_state
from .errors import InvalidState, MixedStateMember, WrongMemberCount
from .hermitian import (
    eig,
    frobenius,
    hermitize,
    matfun,
    support_projector,
    trace_product,
)

POVM_PSD_ATOL = 1e-9
POVM_COMPLETENESS_ATOL = 1e-8


@dataclass(frozen=True)
class Povm:
    """Measurement elements summing to a projector on their declared support.

    ``elements`` is an (n, dim, dim) stack of PSD matrices; ``support`` is the
    projector they sum to (the identity for a full-rank measurement). Use
    :meth:`completed` when a consumer needs elements summing to the full
    identity: the off-support remainder is folded into element 0, where it
    cannot change any success probability evaluated on on-support states.
    """

    elements: np.ndarray
    support: np.ndarray

    def __post_init__(self):
        elements = np.asarray(self.elements, dtype=np.complex128)
        support = np.asarray(self.support, dtype=np.complex128)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "support", support)
        for x in range(elements.shape[0]):
            wmin = float(np.linalg.eigvalsh(elements[x])[0])
            if wmin < -POVM_PSD_ATOL:
                raise InvalidState(f"POVM element {x} has eigenvalue {wmin:.3e}")
        residual = frobenius(elements.sum(axis=0) - support)
        if residual > POVM_COMPLETENESS_ATOL:
            raise InvalidState(f"POVM completeness residual {residual:.3e} on its support")

    @property
    def n_outcomes(self) -> int:
        return self.elements.shape[0]

    @property
    def dim(self) -> int:
        return self.elements.shape[1]

    def completeness_residual(self) -> float:
        """Frobenius distance between the element sum and the support projector."""
        return frobenius(self.elements.sum(axis=0) - self.support)

    def completed(self) -> np.ndarray:
        """Element stack with the off-support remainder assigned to element 0."""
        out = self.elements.copy()
        out[0] = hermitize(out[0] + np.eye(self.dim) - self.support)
        return out


def success_probability(e: Ensemble, elements) -> float:
    """Expected success probability sum_x p_x Tr(M_x rho_x) for a given POVM."""
    ms = np.asarray(elements, dtype=np.complex128)
    return float(
        sum(e.probs[x] * trace_product(ms[x], e.states[x]) for x in range(e.n_states))
    )


def srm_povm(e: Ensemble) -> Povm:
    """Square-root measurement of the ensemble, on the support of the average state."""
    rho = average_state(e)
    w = matfun(rho, lambda x: x**-0.5, support_only=True)
    elements = np.empty_like(e.states)
    for x in range(e.n_states):
        elements[x] = hermitize(e.probs[x] * (w @ e.states[x] @ w))
    return Povm(elements, support_projector(rho))


def srm_bound(e: Ensemble) -> float:
    """Success probability achieved by the square-root measurement."""
    return success_probability(e, srm_povm(e).elements)


def _overlap_grid(e: Ensemble) -> np.ndarray:
    """|<psi_i|psi_j>|^2 for all pairs; exact from vectors when available."""
    if e.vectors is not None:
        inner = e.vectors.conj() @ e.vectors.T
        return np.abs(inner) ** 2
    grid = np.empty((e.n_states, e.n_states))
    for i in range(e.n_states):
        for j in range(i, e.n_states):
            grid[i, j] = grid[j, i] = trace_product(e.states[i], e.states[j])
    return grid


def pairwise_bound(e: Ensemble) -> float:
    """Closed-form bound sum_i p_i^2 / sum_j p_j |<psi_i|psi_j>|^2.

    Defined for pure-state ensembles only; the j-sum includes j = i. Raises
    :class:`MixedStateMember` when any member has rank above 1.
    """
    for x in range(e.n_states):
        if not e.is_pure(x):
            raise MixedStateMember(f"member {x} is mixed; the pairwise bound needs pure states")
    overlaps = _overlap_grid(e)
    denominators = overlaps @ e.probs
    return float(np.sum(e.probs**2 / denominators))


def helstrom(e: Ensemble) -> float:
    """Exact two-state optimum (1 + ||p_1 rho_1 - p_2 rho_2||_1) / 2."""
    if e.n_states != 2:
        raise WrongMemberCount(f"the two-state optimum needs exactly 2 members, got {e.n_states}")
    diff = e.probs[0] * e.states[0] - e.probs[1] * e.states[1]
    w = eig(diff).eigenvalues
    return float(0.5 * (1.0 + np.abs(w).sum()))


@dataclass(frozen=True)
class BoundReport:
    """All applicable bounds for one ensemble plus the oracle bracket.

    ``pairwise`` is None when any member is mixed; ``helstrom`` is None unless
    the ensemble has exactly two members. Every present lower bound is bounded
    above by ``oracle_dual`` up to solver tolerance.
    """

    entropic: float
    srm: float
    pairwise: float | None
    helstrom: float | None
    oracle_primal: float
    oracle_dual: float
