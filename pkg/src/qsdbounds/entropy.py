"""Shannon and von Neumann entropies and the entropic distinguishability bounds.

All entropies are in bits (base-2 logarithms throughout the package).

For a labeled mixture the joint label/system entropy satisfies
``S(XQ) = H(p) + sum_x p_x S(rho_x)``, so the conditional entropy of the
label given the system reduces to ensemble-level formulas:

    S(X|Q) = S(XQ) - S(Q) = H(p) - [S(sum_x p_x rho_x) - sum_x p_x S(rho_x)]
           = H(p) - holevo.

The joint state itself is never materialized; no eigenproblem larger than
``dim`` is ever solved.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ensemble import ClassicalEnsemble, Ensemble, average_state
from .errors import InconsistentInput, InvalidState, NotNormalized
from .hermitian import eig

# Eigenvalues in [-EIG_CLIP, 0) are treated as exact zeros before taking
# logarithms; anything below -EIG_CLIP is a validation error, never silently
# clipped.
EIG_CLIP = 1e-10


def _check_distribution(p: np.ndarray, where: str) -> np.ndarray:
    arr = np.asarray(p, dtype=np.float64).ravel()
    if np.any(arr < -1e-12):
        raise NotNormalized(f"{where}: negative probabilities present (min {arr.min()!r})")
    total = float(arr.sum())
    if abs(total - 1.0) > 1e-10:
        raise NotNormalized(f"{where}: probabilities sum to {total!r}, expected 1")
    return arr


def shannon(p) -> float:
    """Base-2 Shannon entropy of a probability vector, with 0 log 0 = 0."""
    arr = _check_distribution(p, "shannon")
    nz = arr[arr > 0.0]
    return float(-(nz * np.log2(nz)).sum()) + 0.0


def von_neumann(rho) -> float:
    """Von Neumann entropy in bits: Shannon entropy of the spectrum."""
    w = eig(rho).eigenvalues
    if w[-1] < -EIG_CLIP:
        raise InvalidState(f"not a density operator: eigenvalue {w[-1]:.3e} below -{EIG_CLIP}")
    w = np.where(w < 0.0, 0.0, w)
    nz = w[w > 0.0]
    return float(-(nz * np.log2(nz)).sum()) + 0.0


@dataclass(frozen=True)
class EntropyProfile:
    """Entropies of one ensemble, all in bits.

    h_x : Shannon entropy of the preparation probabilities
    s_avg : entropy of the average state
    s_members : entropy of each member state
    holevo : s_avg - sum_x p_x s_members[x], the label/system correlation
    cond : h_x - holevo, the conditional entropy of the label given the system
    """

    h_x: float
    s_avg: float
    s_members: tuple[float, ...]
    holevo: float
    cond: float


def profile(e: Ensemble) -> EntropyProfile:
    """All entropic quantities of an ensemble, from ensemble-level formulas."""
    h_x = shannon(e.probs)
    s_avg = von_neumann(average_state(e))
    s_members = tuple(von_neumann(e.states[x]) for x in range(e.n_states))
    holevo = s_avg - float(np.dot(e.probs, s_members))
    cond = h_x - holevo
    return EntropyProfile(h_x, s_avg, s_members, holevo, cond)


def entropic_bound(e: Ensemble) -> float:
    """Entropy-based lower bound 2**(-cond) on the optimal success probability."""
    bound = float(2.0 ** (-profile(e).cond))
    if bound > 1.0 + 1e-9:
        raise InconsistentInput(f"entropic bound {bound!r} exceeds 1; inputs are inconsistent")
    return min(bound, 1.0)


def pure_state_bound(rho, n_states: int) -> float:
    """Lower bound 2**S(rho) / N requiring only the density operator and N.

    Valid for a system prepared in one of ``n_states`` pure states with the
    mixture described by ``rho``; a rank-r mixture of N pure states has
    S <= log2 N, so a larger entropy means the inputs are inconsistent.
    """
    if n_states < 1:
        raise InconsistentInput(f"n_states must be >= 1, got {n_states}")
    s = von_neumann(rho)
    if s > np.log2(n_states) + 1e-9:
        raise InconsistentInput(
            f"S(rho) = {s!r} exceeds log2({n_states}); no such pure-state ensemble exists"
        )
    return min(float(2.0**s / n_states), 1.0)


def classical_bound(c: ClassicalEnsemble) -> float:
    """Classical lower bound 2**(-H(X|Y)) from the joint label/outcome grid.

    H(X|Y) = -sum_xy p(x,y) log2 p(x|y); outcome columns with p(y) = 0
    contribute nothing.
    """
    joint = c.joint
    py = c.outcome_probs()
    h_cond = 0.0
    for y in range(c.n_outcomes):
        if py[y] <= 0.0:
            continue
        col = joint[:, y]
        nz = col[col > 0.0]
        h_cond -= float((nz * np.log2(nz / py[y])).sum())
    return float(2.0 ** (-h_cond))


def classical_optimum(c: ClassicalEnsemble) -> float:
    """Exact classical optimum sum_y max_x p(x, y)."""
    return float(c.joint.max(axis=0).sum())


def mutual_information(c: ClassicalEnsemble) -> float:
    """Classical mutual information H(X) + H(Y) - H(XY) in bits."""
    return (
        shannon(c.label_probs())
        + shannon(c.outcome_probs())
        - shannon(c.joint.ravel())
    )
