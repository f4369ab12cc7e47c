"""Truncated hypergeometric series modulo p^2 and p^3, the Morita p-adic gamma
function, and a registry of congruences checked by exact residue arithmetic."""

from __future__ import annotations

from .core import (
    PadicApprox,
    PrimeContext,
    Residue,
    as_rational,
    context,
    cornacchia,
    embed,
    harmonic_mod_p,
    least_nonneg_residue,
    legendre_symbol,
    max_prime,
    sqrt_lift,
    vp,
)
from .errors import PadicError
from .gamma import (
    ExponentSpec,
    gamma_log_derivative,
    gamma_p,
    gamma_table,
    gauss_mult_check,
    lambda_p2,
    neg_lambda,
    one_minus_lambda,
    zpow,
)
from .hyper import (
    SeriesSpec,
    ZPoly,
    exact_terminating_hyper,
    hyper_residue,
    hyper_sum,
    legendre_poly,
    pochhammer,
    polynomial_congruence_check,
    truncated_hyper,
)
from .registry import CaseResult, SweepReport, Verdict, check_case, list_theorems, lookup, sweep
from .special import ahlgren_ono_check, cm_congruence_check, dflst_check, eta_product_ap

__all__ = [
    "PadicApprox",
    "PrimeContext",
    "Residue",
    "as_rational",
    "context",
    "cornacchia",
    "embed",
    "harmonic_mod_p",
    "least_nonneg_residue",
    "legendre_symbol",
    "max_prime",
    "sqrt_lift",
    "vp",
    "PadicError",
    "ExponentSpec",
    "gamma_log_derivative",
    "gamma_p",
    "gamma_table",
    "gauss_mult_check",
    "lambda_p2",
    "neg_lambda",
    "one_minus_lambda",
    "zpow",
    "SeriesSpec",
    "ZPoly",
    "exact_terminating_hyper",
    "hyper_residue",
    "hyper_sum",
    "legendre_poly",
    "pochhammer",
    "polynomial_congruence_check",
    "truncated_hyper",
    "CaseResult",
    "SweepReport",
    "Verdict",
    "check_case",
    "list_theorems",
    "lookup",
    "sweep",
    "ahlgren_ono_check",
    "cm_congruence_check",
    "dflst_check",
    "eta_product_ap",
]
