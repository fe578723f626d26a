"""Generalized Hilbert tensors: products, Z1-eigenpairs, and spectral bounds.

An order-m, dimension-d generalized Hilbert tensor has entries
1/(i1 + ... + im + shift) with indices starting at 0 and a real shift that
is not a non-positive integer.  The package provides:

* `HilbertTensor` -- compact descriptor; entries come from the generating
  sequence h[k] = 1/(k + shift) and are never materialized in full.
* `apply_naive` / `form_naive` -- brute-force reference products (oracles).
* `apply_fast` / `form_fast` -- convolution-based products, O(m S log S).
* `z1_power_iterate`, `z1_newton_refine`, `matrix_eig_oracle`,
  `simplex_grid_oracle` -- Z1-eigenpair solvers and independent oracles.
* `bound_C`, `bound_M`, `bound_report` -- closed-form spectral-radius
  bounds; `frazer_lhs` / `ingham_lhs` -- Hilbert-type inequality checks.
* `hilbert_tensors.lab` -- sweep/benchmark harness behind the
  `hilbert-lab` command-line tool.
"""

from .core import (
    HilbertTensor,
    InvalidParameterError,
    DimensionMismatchError,
    NotApplicableError,
    NAIVE_COST_LIMIT,
    as_vector,
    norm1,
    norm2,
    norm_sup,
    apply_naive,
    form_naive,
    t_operator,
)
from .fast_hankel import (
    convolve,
    poly_power_coeffs,
    hankel_correlate,
    apply_fast,
    form_fast,
    bench_apply,
)
from .bounds import (
    BoundReport,
    BoundViolationError,
    n_lambda_direct,
    n_lambda_piecewise,
    bound_C,
    bound_M,
    bound_report,
    frazer_lhs,
    ingham_lhs,
)
from .solver import (
    SolverConfig,
    Z1Pair,
    z1_power_iterate,
    residual,
    matrix_eig_oracle,
    simplex_grid_oracle,
    z1_newton_refine,
    z1_newton_multistart,
)

__version__ = "0.1.0"

__all__ = [
    "HilbertTensor",
    "InvalidParameterError",
    "DimensionMismatchError",
    "NotApplicableError",
    "NAIVE_COST_LIMIT",
    "as_vector",
    "norm1",
    "norm2",
    "norm_sup",
    "apply_naive",
    "form_naive",
    "t_operator",
    "convolve",
    "poly_power_coeffs",
    "hankel_correlate",
    "apply_fast",
    "form_fast",
    "bench_apply",
    "BoundReport",
    "BoundViolationError",
    "n_lambda_direct",
    "n_lambda_piecewise",
    "bound_C",
    "bound_M",
    "bound_report",
    "frazer_lhs",
    "ingham_lhs",
    "SolverConfig",
    "Z1Pair",
    "z1_power_iterate",
    "residual",
    "matrix_eig_oracle",
    "simplex_grid_oracle",
    "z1_newton_refine",
    "z1_newton_multistart",
]
