"""Numerical verification of numerical radius and operator norm inequalities.

Core pieces: Hermitian eigensolvers and functional calculus
(:mod:`~nrbounds.linalg`), Gauss-Legendre quadrature and operator
Hermite-Hadamard integrals (:mod:`~nrbounds.hh`), the numerical radius
(:mod:`~nrbounds.radius`), inequality chains (:mod:`~nrbounds.bounds`) and a
randomized suite runner with a command-line front end (:mod:`~nrbounds.suite`,
:mod:`~nrbounds.cli`).
"""
from .bounds import (CHAINS, Assertion, ChainReport, OperatorData, abs_sum_chain,
                     additive_refinement_chain, bourin_norm_check, cartesian_lower_chain,
                     cartesian_parts_chain, cartesian_power_chain, convex_sup_chain,
                     fourpoint_vs_integral, kittaneh_chain, power_mean_chain,
                     prop_mean_chain, sharpness_chain, squared_refinement_chain,
                     upper_fourpoint, weighted_power_chain, weighted_refined_chain)
from .ensembles import KINDS, Ensemble, gen_matrix, gen_partner
from .errors import (AdmissibilityError, ConfigError, ConvergenceError, DimensionError,
                     DomainError, EvaluationError, NormalizationError, NRBoundsError)
from .functions import IDENTITY, SQUARE, ScalarFn, custom, power
from .hh import HHChain, hh_chain, hh_integral
from .linalg import (EigenDecomposition, as_hermitian, cartesian_decompose, hermitian_eig,
                     hermitian_norm, jacobi_eig, loewner_leq, matrix_function,
                     operator_abs, operator_norm)
from .matrix_io import read_matrix, write_matrix
from .quadrature import gauss_legendre, graded_rule
from .radius import (RadiusResult, SupEstimate, numerical_radius, numerical_range_sample,
                     sup_unit_sphere)
from .suite import SuiteConfig, SuiteReport, default_config, run_suite, sharpness_experiment

__version__ = "0.1.0"

__all__ = [
    "CHAINS", "Assertion", "ChainReport", "OperatorData", "abs_sum_chain",
    "additive_refinement_chain", "bourin_norm_check", "cartesian_lower_chain",
    "cartesian_parts_chain", "cartesian_power_chain", "convex_sup_chain",
    "fourpoint_vs_integral", "kittaneh_chain", "power_mean_chain", "prop_mean_chain",
    "sharpness_chain", "squared_refinement_chain", "upper_fourpoint",
    "weighted_power_chain", "weighted_refined_chain", "KINDS", "Ensemble", "gen_matrix",
    "gen_partner", "AdmissibilityError", "ConfigError", "ConvergenceError",
    "DimensionError", "DomainError", "EvaluationError", "NormalizationError",
    "NRBoundsError", "IDENTITY", "SQUARE", "ScalarFn", "custom", "power", "HHChain",
    "hh_chain", "hh_integral", "EigenDecomposition", "as_hermitian",
    "cartesian_decompose", "hermitian_eig", "hermitian_norm", "jacobi_eig",
    "loewner_leq", "matrix_function", "operator_abs", "operator_norm", "read_matrix",
    "write_matrix", "gauss_legendre", "graded_rule", "RadiusResult", "SupEstimate", "numerical_radius",
    "numerical_range_sample", "sup_unit_sphere", "SuiteConfig", "SuiteReport",
    "default_config", "run_suite", "sharpness_experiment",
]
