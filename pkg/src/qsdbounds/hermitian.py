"""Dense complex Hermitian linear algebra: validation, eigendecomposition,
spectral matrix functions on the support, and trace forms.

All operators are plain ``numpy`` arrays of dtype complex128. Functions are
pure and never mutate their arguments.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np

from .errors import ConvergenceFailure, DimensionMismatch, DomainError, NonHermitianInput

# Entrywise |A - A^dag| tolerance for accepting a matrix as Hermitian.
HERMITICITY_ATOL = 1e-10

# Relative eigenvalue cutoff defining the support of a PSD operator:
# eigenvalues <= RANK_CUTOFF * (largest eigenvalue) count as zero.
RANK_CUTOFF = 1e-10

# Magnitude below which an eigenvector component is treated as zero when
# fixing the phase convention.
_PHASE_EPS = 1e-12


class Spectrum(NamedTuple):
    """Eigendecomposition of a Hermitian matrix.

    ``eigenvalues`` are real and sorted in descending order; the columns of
    ``eigenvectors`` are the matching orthonormal eigenvectors, each rotated
    so that its first non-negligible component is positive real.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_operator(a) -> np.ndarray:
    """Coerce ``a`` to a square complex128 matrix."""
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {arr.shape}")
    return arr


def hermiticity_residual(a) -> float:
    """Largest entrywise deviation |a - a^dag|; +inf for non-finite entries."""
    arr = as_operator(a)
    if not np.all(np.isfinite(arr)):
        return float("inf")
    return float(np.abs(arr - arr.conj().T).max())


def require_hermitian(a, tol: float = HERMITICITY_ATOL) -> np.ndarray:
    """Return ``a`` as an array after checking the Hermitian invariant."""
    arr = as_operator(a)
    res = hermiticity_residual(arr)
    if res > tol:
        raise NonHermitianInput(
            f"matrix is not Hermitian: max |A - A^dag| = {res:.3e} exceeds {tol:.1e}"
        )
    return arr


def eig(a, tol: float = HERMITICITY_ATOL) -> Spectrum:
    """Eigendecomposition of a Hermitian matrix with a deterministic convention.

    Eigenvalues come out in descending order. Each eigenvector is rotated by a
    global phase so its first component of magnitude above 1e-12 is positive
    real, which makes repeated runs (and golden files) reproducible.

    Raises
    ------
    NonHermitianInput
        If the symmetry tolerance is violated.
    ConvergenceFailure
        If the underlying solver fails to converge.
    """
    arr = require_hermitian(a, tol)
    try:
        w, v = np.linalg.eigh(arr)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"eigensolver did not converge: {exc}") from exc
    w = w[::-1].copy()
    v = v[:, ::-1].copy()
    for k in range(v.shape[1]):
        col = v[:, k]
        nz = np.flatnonzero(np.abs(col) > _PHASE_EPS)
        if nz.size:
            lead = col[nz[0]]
            v[:, k] = col * (lead.conjugate() / abs(lead))
    return Spectrum(w, v)


def support_cutoff(eigenvalues: np.ndarray) -> float:
    """Absolute eigenvalue threshold below which the spectrum counts as zero."""
    top = float(np.max(eigenvalues, initial=0.0))
    return RANK_CUTOFF * max(top, 0.0)


def support_projector(a) -> np.ndarray:
    """Orthogonal projector onto the support (nonzero eigenspace) of ``a``."""
    w, v = eig(a)
    keep = w > support_cutoff(w)
    vs = v[:, keep]
    return vs @ vs.conj().T


def support_rank(a) -> int:
    """Number of eigenvalues above the support cutoff."""
    w = eig(a).eigenvalues
    return int(np.count_nonzero(w > support_cutoff(w)))


def _apply_scalar(f: Callable[[float], float], values: np.ndarray) -> np.ndarray:
    out = np.empty(values.shape, dtype=np.float64)
    for i, x in enumerate(values):
        try:
            with np.errstate(all="ignore"):
                out[i] = float(f(float(x)))
        except (ValueError, ZeroDivisionError, OverflowError) as exc:
            raise DomainError(f"f({x!r}) is outside the function domain") from exc
    if not np.all(np.isfinite(out)):
        bad = values[~np.isfinite(out)][0]
        raise DomainError(f"f({bad!r}) produced a non-finite value")
    return out


def matfun(a, f: Callable[[float], float], support_only: bool = False) -> np.ndarray:
    """Spectral matrix function V f(Lambda) V^dag.

    With ``support_only`` set, ``f`` is applied only to eigenvalues above the
    relative rank cutoff and the rest map to zero, which gives pseudo-inverse
    semantics for functions such as ``x -> x**-0.5``.
    """
    w, v = eig(a)
    if support_only:
        mapped = np.zeros_like(w)
        on = w > support_cutoff(w)
        if np.any(on):
            mapped[on] = _apply_scalar(f, w[on])
    else:
        mapped = _apply_scalar(f, w)
    out = (v * mapped) @ v.conj().T
    return 0.5 * (out + out.conj().T)


def trace_product(a, b, imag_tol: float = 1e-9) -> float:
    """Re Tr(ab) for Hermitian ``a`` and ``b``.

    Tr(ab) is real for Hermitian operands; an imaginary residue above
    ``imag_tol`` means the inputs were not actually Hermitian and raises.
    """
    arr_a = as_operator(a)
    arr_b = as_operator(b)
    if arr_a.shape != arr_b.shape:
        raise DimensionMismatch(
            f"trace_product requires equal dims, got {arr_a.shape} and {arr_b.shape}"
        )
    t = complex(np.sum(arr_a * arr_b.T))
    if abs(t.imag) > imag_tol:
        raise NonHermitianInput(
            f"Tr(ab) has imaginary residue {t.imag:.3e}; operands are not both Hermitian"
        )
    return float(t.real)


def hermitize(a) -> np.ndarray:
    """Hermitian part (A + A^dag)/2, used to scrub rounding drift."""
    arr = as_operator(a)
    return 0.5 * (arr + arr.conj().T)


def frobenius(a) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(np.asarray(a)))
