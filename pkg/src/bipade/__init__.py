"""Recursive univariate and rectangular bivariate Pade approximants.

Exact-rational (or float) diagonal [n/n] approximants by three-term
recursion, left/right rectangular bivariate approximants by a double
recursion with linear-solve oracles, and an application to the singular
Riccati equation with an exact Bessel-function reference.
"""

from .algebra import Poly
from .bivariate import (
    BivPade,
    Seeds,
    compute_seeds,
    left_pade,
    oracle_left_pade,
    right_pade,
)
from .errors import (
    DegenerateTableError,
    EstimationSingularError,
    InputError,
    OrderError,
    PadeError,
    PoleError,
    ResonanceError,
)
from .riccati import (
    C01Estimate,
    RiccatiProblem,
    direct_coeff_ratios,
    error_table,
    estimate_c01,
    evaluate_bessel_solution,
    exact_c01,
    explicit_check_params,
    explicit_jacobi_params,
    generate_series,
    jacobi_explicit_pade,
    left_pade_refined,
    right_induction_coeffs,
)
from .series import BivSeries, required_orders
from .univariate import UniPade, jacobi_pade, oracle_pade

__all__ = [
    "Poly",
    "BivPade",
    "Seeds",
    "compute_seeds",
    "left_pade",
    "oracle_left_pade",
    "right_pade",
    "DegenerateTableError",
    "EstimationSingularError",
    "InputError",
    "OrderError",
    "PadeError",
    "PoleError",
    "ResonanceError",
    "C01Estimate",
    "RiccatiProblem",
    "direct_coeff_ratios",
    "error_table",
    "estimate_c01",
    "evaluate_bessel_solution",
    "exact_c01",
    "explicit_check_params",
    "explicit_jacobi_params",
    "generate_series",
    "jacobi_explicit_pade",
    "left_pade_refined",
    "right_induction_coeffs",
    "BivSeries",
    "required_orders",
    "UniPade",
    "jacobi_pade",
    "oracle_pade",
]

__version__ = "0.1.0"
