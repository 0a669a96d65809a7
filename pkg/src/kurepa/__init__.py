"""Kurepa's left-factorial function K(z) = int_0^inf e^-t (t^z - 1)/(t - 1) dt.

Evaluation on the complex plane, the P/Q/R sequence identities linking K(z)
and K(z - n), and numerical checks of inequalities for K(x), x > 0.
"""

from ._backend import BACKEND
from .bounds import (
    BoundReport,
    asymptotic_diagnostics,
    corollary_ratio,
    gamma_p5_approx,
    karamata_bound,
    lemma4_check,
    lemma5_check,
    nesting_check,
    sandwich_bounds,
    theorem3_check,
)
from .errors import ConvergenceError, DomainError, KurepaError, PoleError, SingularArgument
from .gamma_core import gamma, gamma_real, gamma_residue, log_gamma
from .kurepa_eval import (
    ExactLeftFactorial,
    KurepaValue,
    Method,
    QuadratureConfig,
    kurepa,
    kurepa_derivative,
    kurepa_integral,
    kurepa_ratio,
    kurepa_residue,
    left_factorial_exact,
)
from .recurrences import (
    Family,
    Route,
    SequenceEval,
    g_k,
    p_n,
    q_n,
    r_n,
    verify_theorem1,
    verify_theorem2,
)

__all__ = [
    "BACKEND",
    "BoundReport",
    "ConvergenceError",
    "DomainError",
    "ExactLeftFactorial",
    "Family",
    "KurepaError",
    "KurepaValue",
    "Method",
    "PoleError",
    "QuadratureConfig",
    "Route",
    "SequenceEval",
    "SingularArgument",
    "asymptotic_diagnostics",
    "corollary_ratio",
    "g_k",
    "gamma",
    "gamma_p5_approx",
    "gamma_real",
    "gamma_residue",
    "karamata_bound",
    "kurepa",
    "kurepa_derivative",
    "kurepa_integral",
    "kurepa_ratio",
    "kurepa_residue",
    "left_factorial_exact",
    "lemma4_check",
    "lemma5_check",
    "log_gamma",
    "nesting_check",
    "p_n",
    "q_n",
    "r_n",
    "sandwich_bounds",
    "theorem3_check",
    "verify_theorem1",
    "verify_theorem2",
]
