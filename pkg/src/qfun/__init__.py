"""q-gamma and q-digamma family with certified truncation bounds.

Evaluators for the q-deformed gamma, digamma, and polygamma functions in
both regimes (0 < q < 1 and q > 1), a locator for the unique positive zero
of the q-digamma, and numerical certifiers for a family of logarithmic
complete-monotonicity claims about ratios and products of these functions.
"""

from .core import (
    DEFAULT_TRUNCATION,
    DomainError,
    EvalResult,
    MAX_DERIV_ORDER,
    NonConvergent,
    QParam,
    Regime,
    ResidualCheck,
    Truncation,
    UnsupportedOrder,
    digamma_inversion_residual,
    gamma_inversion_residual,
    ln_q_gamma,
    q_bracket,
    q_digamma,
    q_gamma,
    q_polygamma,
)
from .roots import BracketError, ZeroResult, digamma_zero, q_euler_mascheroni, q_harmonic
from .deriv import (
    CMReport,
    LogDerivProvider,
    N_MAX,
    certify_lcm,
    default_step,
    finite_diff,
    ln_gamma_provider,
    log_derivatives,
    make_grid,
    ratio_provider,
)
from .theorems import (
    CLAIM_IDS,
    RatioSpec,
    VerifyReport,
    beta_star,
    g_beta_log_deriv,
    g_beta_provider,
    inv_digamma_provider,
    ln_g_beta,
    phi_series_coefficient,
    psi_duplication_residual,
    ratio_log_middle,
    run_claim,
    verify_g_beta_lcm,
    verify_gamma_lcm_and_superadd,
    verify_ineq_1,
    verify_ineq_010,
    verify_ineq_555,
    verify_ineq_666,
    verify_inv_digamma_lcm,
    verify_phi_coeff,
    verify_psi_duplication,
    verify_remark_ineq,
    verify_theorem_ratio_lcm,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TRUNCATION",
    "DomainError",
    "EvalResult",
    "MAX_DERIV_ORDER",
    "NonConvergent",
    "QParam",
    "Regime",
    "ResidualCheck",
    "Truncation",
    "UnsupportedOrder",
    "digamma_inversion_residual",
    "gamma_inversion_residual",
    "ln_q_gamma",
    "q_bracket",
    "q_digamma",
    "q_gamma",
    "q_polygamma",
    "BracketError",
    "ZeroResult",
    "digamma_zero",
    "q_euler_mascheroni",
    "q_harmonic",
    "CMReport",
    "LogDerivProvider",
    "N_MAX",
    "certify_lcm",
    "default_step",
    "finite_diff",
    "ln_gamma_provider",
    "log_derivatives",
    "make_grid",
    "ratio_provider",
    "CLAIM_IDS",
    "RatioSpec",
    "VerifyReport",
    "beta_star",
    "g_beta_log_deriv",
    "g_beta_provider",
    "inv_digamma_provider",
    "ln_g_beta",
    "phi_series_coefficient",
    "psi_duplication_residual",
    "ratio_log_middle",
    "run_claim",
    "verify_g_beta_lcm",
    "verify_gamma_lcm_and_superadd",
    "verify_ineq_1",
    "verify_ineq_010",
    "verify_ineq_555",
    "verify_ineq_666",
    "verify_inv_digamma_lcm",
    "verify_phi_coeff",
    "verify_psi_duplication",
    "verify_remark_ineq",
    "verify_theorem_ratio_lcm",
    "__version__",
]
