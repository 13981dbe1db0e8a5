"""qsdbounds: lower bounds and a certified numerical oracle for
minimum-error quantum state discrimination.

Given an ensemble of quantum states with preparation probabilities, the
package computes an entropic lower bound on the optimal identification
probability, the square-root-measurement and pairwise-overlap bounds, the
exact two-state optimum, and a certified primal/dual bracket of the true
optimum.
"""

from ._kernels import backend as kernel_backend
from .bounds import (
    BoundReport,
    Povm,
    helstrom,
    pairwise_bound,
    srm_bound,
    srm_povm,
    success_probability,
)
from .ensemble import (
    ClassicalEnsemble,
    Ensemble,
    average_state,
    dump_json,
    from_vectors,
    load_json,
    make_classical,
    make_four_state,
    make_three_state,
    measurement_joint,
    to_jsonable,
)
from .entropy import (
    EntropyProfile,
    classical_bound,
    classical_optimum,
    entropic_bound,
    mutual_information,
    profile,
    pure_state_bound,
    shannon,
    von_neumann,
)
from .hermitian import (
    Spectrum,
    eig,
    hermiticity_residual,
    hermitize,
    matfun,
    support_projector,
    trace_product,
)
from .oracle import (
    MinEntropyEstimate,
    MonotonicityCheck,
    OracleResult,
    check_monotonicity,
    min_entropy_cond,
    optimal_success,
)
from .report import FullReport, bound_report, full_report

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ClassicalEnsemble",
    "Ensemble",
    "EntropyProfile",
    "FullReport",
    "MinEntropyEstimate",
    "MonotonicityCheck",
    "OracleResult",
    "Povm",
    "Spectrum",
    "average_state",
    "bound_report",
    "check_monotonicity",
    "classical_bound",
    "classical_optimum",
    "dump_json",
    "eig",
    "entropic_bound",
    "from_vectors",
    "full_report",
    "helstrom",
    "hermiticity_residual",
    "hermitize",
    "kernel_backend",
    "load_json",
    "make_classical",
    "make_four_state",
    "make_three_state",
    "matfun",
    "measurement_joint",
    "min_entropy_cond",
    "mutual_information",
    "optimal_success",
    "pairwise_bound",
    "profile",
    "pure_state_bound",
    "shannon",
    "srm_bound",
    "srm_povm",
    "success_probability",
    "support_projector",
    "to_jsonable",
    "trace_product",
    "von_neumann",
]
