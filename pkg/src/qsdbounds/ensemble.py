"""Ensembles of quantum states with preparation probabilities.

An :class:`Ensemble` holds the pairs ``(p_x, rho_x)`` describing a system
randomly prepared in one of ``n`` states. Pure members are stored as their
rank-1 density operators so mixed and pure ensembles share one code path;
when an ensemble is built from state vectors the vectors are kept alongside
for exact overlap computations.

The module also provides the parametric example families used throughout the
test-suite and CLI sweeps, classical (diagonal) ensembles, and the JSON
ensemble schema consumed by the CLI.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidState,
    NotNormalized,
    ProbabilityOutOfRange,
    SchemaError,
    WrongMemberCount,
)
from .hermitian import HERMITICITY_ATOL, RANK_CUTOFF, eig, hermiticity_residual, hermitize

PROB_SUM_ATOL = 1e-10
PSD_ATOL = 1e-10
TRACE_ATOL = 1e-10
VECTOR_NORM_ATOL = 1e-6


def _check_state(rho: np.ndarray, where: str) -> None:
    res = hermiticity_residual(rho)
    if res > HERMITICITY_ATOL:
        raise InvalidState(f"{where}: not Hermitian (residual {res:.3e})")
    w = np.linalg.eigvalsh(rho)
    if w[0] < -PSD_ATOL:
        raise InvalidState(f"{where}: not positive semidefinite (min eigenvalue {w[0]:.3e})")
    tr = float(np.real(np.trace(rho)))
    if abs(tr - 1.0) > TRACE_ATOL:
        raise InvalidState(f"{where}: trace {tr!r} is not 1")


@dataclass(frozen=True)
class Ensemble:
    """Set of ``n`` density operators with preparation probabilities.

    Fields
    ------
    probs : (n,) float array summing to 1
    states : (n, dim, dim) complex array of PSD unit-trace matrices
    vectors : optional (n, dim) complex array of unit state vectors, present
        only when every member is pure and was constructed from a vector
    label : free-form description
    """

    probs: np.ndarray
    states: np.ndarray
    vectors: np.ndarray | None = None
    label: str = ""

    def __post_init__(self):
        probs = np.asarray(self.probs, dtype=np.float64)
        states = np.asarray(self.states, dtype=np.complex128)
        object.__setattr__(self, "probs", probs)
        object.__setattr__(self, "states", states)
        if probs.ndim != 1 or probs.size == 0:
            raise WrongMemberCount("an ensemble needs at least one member")
        if states.ndim != 3 or states.shape[0] != probs.size:
            raise DimensionMismatch(
                f"states shape {states.shape} does not match {probs.size} probabilities"
            )
        if states.shape[1] != states.shape[2]:
            raise DimensionMismatch(f"member states must be square, got {states.shape[1:]}")
        if np.any(probs < -1e-12) or np.any(probs > 1 + 1e-12):
            raise ProbabilityOutOfRange(f"probabilities outside [0, 1]: {probs!r}")
        total = float(probs.sum())
        if abs(total - 1.0) > PROB_SUM_ATOL:
            raise NotNormalized(f"probabilities sum to {total!r}, expected 1")
        for x in range(probs.size):
            _check_state(states[x], f"member {x}")
        if self.vectors is not None:
            vecs = np.asarray(self.vectors, dtype=np.complex128)
            object.__setattr__(self, "vectors", vecs)
            if vecs.shape != (probs.size, states.shape[1]):
                raise DimensionMismatch(
                    f"vectors shape {vecs.shape} does not match ensemble {states.shape[:2]}"
                )

    @property
    def dim(self) -> int:
        return self.states.shape[1]

    @property
    def n_states(self) -> int:
        return self.probs.size

    def is_pure(self, x: int) -> bool:
        """Whether member ``x`` is rank-1 within the support cutoff."""
        w = eig(self.states[x]).eigenvalues
        return w.size == 1 or w[1] <= RANK_CUTOFF * max(w[0], 0.0)

    def permuted(self, order) -> "Ensemble":
        """Ensemble with members reordered by the index sequence ``order``."""
        idx = np.asarray(order, dtype=np.intp)
        vecs = None if self.vectors is None else self.vectors[idx]
        return Ensemble(self.probs[idx], self.states[idx], vecs, self.label)


def from_vectors(probs, vectors, label: str = "") -> Ensemble:
    """Build a pure-state ensemble from unit vectors (one row per member)."""
    vecs = np.atleast_2d(np.asarray(vectors, dtype=np.complex128))
    states = np.einsum("xi,xj->xij", vecs, vecs.conj())
    return Ensemble(np.asarray(probs, dtype=np.float64), states, vecs, label)


def average_state(e: Ensemble) -> np.ndarray:
    """The mixture sum p_x rho_x described by the ensemble."""
    return hermitize(np.einsum("x,xij->ij", e.probs, e.states))


def make_three_state(theta: float, variant: str = "original") -> Ensemble:
    """Three 3-dimensional pure states with equal probabilities.

    psi_1 = sin(theta)|0> + cos(theta)|2>, psi_3 = -sin(theta)|0> + cos(theta)|2>,
    and psi_2 = |1> for the ``original`` variant or (|0> + |1>)/sqrt(2) for
    ``replaced_psi2``. The replaced psi_2 is normalized to unit length (the
    unnormalized (|0> + |1>)/2 is not a state vector).
    """
    s, c = np.sin(theta), np.cos(theta)
    if variant == "original":
        psi2 = [0.0, 1.0, 0.0]
    elif variant == "replaced_psi2":
        r = 1.0 / np.sqrt(2.0)
        psi2 = [r, r, 0.0]
    else:
        raise ValueError(f"unknown variant {variant!r}")
    vectors = np.array([[s, 0.0, c], psi2, [-s, 0.0, c]], dtype=np.complex128)
    return from_vectors(np.full(3, 1.0 / 3.0), vectors, f"three_state_{variant}(theta={theta!r})")


def make_four_state(theta: float, q: float = 0.5) -> Ensemble:
    """Four 2-dimensional states: |0>, sin|0>+cos|1>, |1>, cos|0>-sin|1>.

    Probabilities are (q/2, (1-q)/2, q/2, (1-q)/2); ``q = 1/2`` gives the
    equal-probability case. The average state is identity/2 for every
    (theta, q).
    """
    if not 0.0 <= q <= 1.0:
        raise ProbabilityOutOfRange(f"q must lie in [0, 1], got {q!r}")
    s, c = np.sin(theta), np.cos(theta)
    vectors = np.array(
        [[1.0, 0.0], [s, c], [0.0, 1.0], [c, -s]], dtype=np.complex128
    )
    probs = np.array([q / 2, (1 - q) / 2, q / 2, (1 - q) / 2])
    return from_vectors(probs, vectors, f"four_state(theta={theta!r}, q={q!r})")


@dataclass(frozen=True)
class ClassicalEnsemble:
    """Joint distribution p(x, y) over labels x (rows) and outcomes y (columns)."""

    joint: np.ndarray

    def __post_init__(self):
        joint = np.asarray(self.joint, dtype=np.float64)
        object.__setattr__(self, "joint", joint)
        if joint.ndim != 2 or joint.size == 0:
            raise DimensionMismatch(f"joint must be a 2-d grid, got shape {joint.shape}")
        if np.any(joint < -1e-15):
            raise NotNormalized(f"joint contains negative mass: min {joint.min()!r}")
        total = float(joint.sum())
        if abs(total - 1.0) > PROB_SUM_ATOL:
            raise NotNormalized(f"joint sums to {total!r}, expected 1")

    @property
    def n_labels(self) -> int:
        return self.joint.shape[0]

    @property
    def n_outcomes(self) -> int:
        return self.joint.shape[1]

    def label_probs(self) -> np.ndarray:
        """Marginal p(x) (row sums)."""
        return self.joint.sum(axis=1)

    def outcome_probs(self) -> np.ndarray:
        """Marginal p(y) (column sums)."""
        return self.joint.sum(axis=0)

    def to_quantum(self, label: str = "") -> Ensemble:
        """Diagonal quantum embedding: member x is diag(p(y|x)).

        Zero-probability labels get the maximally mixed diagonal state; they
        carry no weight in any derived quantity.
        """
        px = self.label_probs()
        k = self.n_outcomes
        states = np.empty((self.n_labels, k, k), dtype=np.complex128)
        for x in range(self.n_labels):
            if px[x] > 0:
                cond = self.joint[x] / px[x]
            else:
                cond = np.full(k, 1.0 / k)
            states[x] = np.diag(cond.astype(np.complex128))
        return Ensemble(px, states, None, label or "classical")


def make_classical(joint) -> ClassicalEnsemble:
    """Validate and wrap a joint probability grid."""
    return ClassicalEnsemble(np.asarray(joint, dtype=np.float64))


def measurement_joint(e: Ensemble, projectors) -> ClassicalEnsemble:
    """Joint distribution p(x, y) = p_x Tr(Pi_y rho_x) induced by a measurement.

    ``projectors`` is a (k, dim, dim) stack forming a POVM (completeness is the
    caller's responsibility); tiny negative probabilities from rounding are
    clipped to zero and the grid renormalized.
    """
    pis = np.asarray(projectors, dtype=np.complex128)
    if pis.ndim != 3 or pis.shape[1:] != (e.dim, e.dim):
        raise DimensionMismatch(
            f"projector stack shape {pis.shape} does not match dim {e.dim}"
        )
    joint = np.einsum("x,yij,xji->xy", e.probs, pis, e.states).real
    joint = np.clip(joint, 0.0, None)
    joint /= joint.sum()
    return ClassicalEnsemble(joint)


# --- JSON ensemble schema ---------------------------------------------------
#
# { "dim": n, "label": str, "members": [
#     { "prob": float, "vector": [[re, im], ...] }            (pure member)
#   | { "prob": float, "matrix": [[[re, im], ...], ...] }     (general member)
# ] }


def _complex_pairs(raw, where: str, shape: tuple) -> np.ndarray:
    arr = np.asarray(raw, dtype=np.float64)
    expected = shape + (2,)
    if arr.shape != expected:
        raise SchemaError(f"{where}: expected shape {list(expected)}, got {list(arr.shape)}")
    return arr[..., 0] + 1j * arr[..., 1]


def parse_json(doc) -> tuple[str, np.ndarray, np.ndarray, np.ndarray | None]:
    """Parse a schema document into (label, probs, states, vectors).

    Raises :class:`SchemaError` on structural problems, naming the offending
    field. Invariants (PSD, trace, probability sum) are *not* enforced here;
    they belong to :class:`Ensemble` construction so that diagnostics can be
    produced for invalid files.
    """
    if not isinstance(doc, dict):
        raise SchemaError("document: expected a JSON object")
    try:
        dim = int(doc["dim"])
    except (KeyError, TypeError, ValueError):
        raise SchemaError("dim: missing or not an integer") from None
    if dim < 1:
        raise SchemaError(f"dim: must be a positive integer, got {dim}")
    label = doc.get("label", "")
    if not isinstance(label, str):
        raise SchemaError("label: expected a string")
    members = doc.get("members")
    if not isinstance(members, list) or not members:
        raise SchemaError("members: expected a non-empty list")

    probs = np.empty(len(members), dtype=np.float64)
    states = np.empty((len(members), dim, dim), dtype=np.complex128)
    vectors = np.zeros((len(members), dim), dtype=np.complex128)
    all_vectors = True
    for i, member in enumerate(members):
        where = f"members[{i}]"
        if not isinstance(member, dict):
            raise SchemaError(f"{where}: expected an object")
        if "prob" not in member:
            raise SchemaError(f"{where}.prob: missing")
        try:
            probs[i] = float(member["prob"])
        except (TypeError, ValueError):
            raise SchemaError(f"{where}.prob: not a number") from None
        has_vec = "vector" in member
        has_mat = "matrix" in member
        if has_vec == has_mat:
            raise SchemaError(f"{where}: exactly one of 'vector' or 'matrix' is required")
        if has_vec:
            try:
                vec = _complex_pairs(member["vector"], f"{where}.vector", (dim,))
            except SchemaError:
                raise
            except (TypeError, ValueError):
                raise SchemaError(f"{where}.vector: expected [re, im] pairs") from None
            norm = float(np.linalg.norm(vec))
            if abs(norm - 1.0) > VECTOR_NORM_ATOL:
                raise SchemaError(
                    f"{where}.vector: norm {norm!r} is not within {VECTOR_NORM_ATOL} of 1"
                )
            vec = vec / norm
            vectors[i] = vec
            states[i] = np.outer(vec, vec.conj())
        else:
            try:
                states[i] = _complex_pairs(member["matrix"], f"{where}.matrix", (dim, dim))
            except SchemaError:
                raise
            except (TypeError, ValueError):
                raise SchemaError(f"{where}.matrix: expected [re, im] pair grid") from None
            all_vectors = False
    return label, probs, states, (vectors if all_vectors else None)


def load_json(path) -> Ensemble:
    """Load and fully validate an ensemble JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"document: invalid JSON ({exc})") from exc
    label, probs, states, vectors = parse_json(doc)
    return Ensemble(probs, states, vectors, label)


def to_jsonable(e: Ensemble) -> dict:
    """Schema document for ``e`` (vectors when available, else matrices)."""
    members = []
    for x in range(e.n_states):
        member: dict = {"prob": float(e.probs[x])}
        if e.vectors is not None:
            member["vector"] = [[float(c.real), float(c.imag)] for c in e.vectors[x]]
        else:
            member["matrix"] = [
                [[float(c.real), float(c.imag)] for c in row] for row in e.states[x]
            ]
        members.append(member)
    return {"dim": e.dim, "label": e.label, "members": members}


def dump_json(e: Ensemble, path) -> None:
    """Write ``e`` to ``path`` in the ensemble JSON schema."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_jsonable(e), fh, indent=2)
        fh.write("\n")
