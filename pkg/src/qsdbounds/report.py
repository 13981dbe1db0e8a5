"""Assembly of every applicable bound for one ensemble."""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import BoundReport, helstrom, pairwise_bound, srm_bound
from .ensemble import Ensemble
from .entropy import EntropyProfile, entropic_bound, profile
from .errors import MixedStateMember
from .oracle import DEFAULT_MAX_ITER, DEFAULT_TOL, OracleResult, optimal_success


@dataclass(frozen=True)
class FullReport:
    """Entropy profile, bound values, and the oracle result for one ensemble."""

    profile: EntropyProfile
    bounds: BoundReport
    oracle: OracleResult


def full_report(
    e: Ensemble, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> FullReport:
    """Compute all bounds that apply to ``e`` plus the certified oracle bracket."""
    prof = profile(e)
    try:
        pairwise = pairwise_bound(e)
    except MixedStateMember:
        pairwise = None
    hel = helstrom(e) if e.n_states == 2 else None
    res = optimal_success(e, tol, max_iter)
    bounds = BoundReport(
        entropic=entropic_bound(e),
        srm=srm_bound(e),
        pairwise=pairwise,
        helstrom=hel,
        oracle_primal=res.primal,
        oracle_dual=res.dual,
    )
    return FullReport(profile=prof, bounds=bounds, oracle=res)


def bound_report(
    e: Ensemble, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> BoundReport:
    """Just the bound values and oracle bracket."""
    return full_report(e, tol, max_iter).bounds
