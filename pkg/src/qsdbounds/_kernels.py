"""Hot numerical kernel for the discrimination oracle.

The fixed-point iteration below dominates the package's runtime (sweeps call
it hundreds of times, property suites thousands). It is written once in a
form numba can compile and is shipped in two flavors:

* ``jrf_solve_numba`` - the @njit-compiled kernel (default when numba is
  importable);
* ``jrf_solve_numpy`` - the same source executed as plain numpy, used as a
  fallback and for cross-checking.

Set the environment variable ``QSDBOUNDS_NO_NUMBA=1`` before import to force
the pure-numpy path; ``backend()`` reports which one is active. Final
primal/dual certification happens outside this module in plain numpy either
way, so the reported bracket never depends on the backend choice.
"""

from __future__ import annotations

import os

import numpy as np

_ENV_FLAG = "QSDBOUNDS_NO_NUMBA"


def _jrf_solve(gs, tol, max_iter, rank_tol):
    """Fixed-point iteration for max sum_x Tr(M_x G_x) over POVMs {M_x}.

    gs is the (n, d, d) complex stack of weighted states G_x = p_x rho_x.
    Each sweep updates M_x <- L+ G_x M_x G_x L+ with L = (sum G M G)^{1/2}
    (pseudo-inverse on the support), restores completeness by spreading the
    off-support remainder uniformly, clips each element back to PSD, and
    evaluates the shift certificate Y = herm(sum G_x M_x) + max(lam*, 0) I,
    lam* = max_x lambda_max(G_x - herm(sum G_x M_x)). Tr Y upper-bounds the
    optimum for any iterate, so the loop stops on the duality gap.

    Returns (elements, primal, dual, iterations).
    """
    n = gs.shape[0]
    d = gs.shape[1]
    eye = np.eye(d).astype(np.complex128)
    ms = np.empty((n, d, d), dtype=np.complex128)
    for x in range(n):
        ms[x] = eye / n
    primal = 0.0
    dual = 1.0
    iterations = 0
    for it in range(max_iter):
        # L = (sum G M G)^{1/2} and its support pseudo-inverse
        t = np.zeros((d, d), dtype=np.complex128)
        for x in range(n):
            t = t + gs[x] @ ms[x] @ gs[x]
        t = 0.5 * (t + t.conj().T)
        w, v = np.linalg.eigh(t)
        cutoff = rank_tol * max(w[d - 1], 0.0)
        winv = np.zeros(d, dtype=np.complex128)
        for i in range(d):
            if w[i] > cutoff:
                winv[i] = 1.0 / np.sqrt(w[i])
        l_pinv = (v * winv) @ v.conj().T

        total = np.zeros((d, d), dtype=np.complex128)
        for x in range(n):
            ms[x] = l_pinv @ gs[x] @ ms[x] @ gs[x] @ l_pinv
            total = total + ms[x]
        rem = (eye - total) / n
        for x in range(n):
            m = ms[x] + rem
            m = 0.5 * (m + m.conj().T)
            w2, v2 = np.linalg.eigh(m)
            clipped = np.zeros(d, dtype=np.complex128)
            for i in range(d):
                if w2[i] > 0.0:
                    clipped[i] = w2[i]
            ms[x] = (v2 * clipped) @ v2.conj().T

        # primal value and shift-certificate dual for the current iterate
        yhat = np.zeros((d, d), dtype=np.complex128)
        primal = 0.0
        for x in range(n):
            a = gs[x] @ ms[x]
            primal += np.real(np.trace(a))
            yhat = yhat + a
        yhat = 0.5 * (yhat + yhat.conj().T)
        lam_star = 0.0
        for x in range(n):
            wmax = np.linalg.eigvalsh(gs[x] - yhat)[d - 1]
            if wmax > lam_star:
                lam_star = wmax
        dual = np.real(np.trace(yhat)) + d * lam_star
        iterations = it + 1
        if dual - primal <= tol:
            break
    return ms, primal, dual, iterations


jrf_solve_numpy = _jrf_solve

_numba_disabled = os.environ.get(_ENV_FLAG, "").strip().lower() in {"1", "true", "yes", "on"}
jrf_solve_numba = None
if not _numba_disabled:
    try:
        import numba

        jrf_solve_numba = numba.njit(cache=True)(_jrf_solve)
    except ImportError:
        pass

if jrf_solve_numba is not None:
    jrf_solve = jrf_solve_numba
    _BACKEND = "numba"
else:
    jrf_solve = jrf_solve_numpy
    _BACKEND = "numpy"


def backend() -> str:
    """Active kernel backend, 'numba' or 'numpy'."""
    return _BACKEND
