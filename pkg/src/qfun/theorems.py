"""Numerical certification of monotonicity and inequality claims for the
q-gamma family.

Each verifier checks one claim over a grid and returns a VerifyReport
carrying the worst margin, the first counterexample if any, and notes on
branch choices or excluded points.  Wherever a claim involves products or
powers of gamma values the comparison happens in log space.  run_claim maps
the stable claim-id strings onto these verifiers with sweep defaults.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .core import (
    DEFAULT_TRUNCATION,
    DomainError,
    QParam,
    Regime,
    ResidualCheck,
    Truncation,
    _fp_allowance,
    ln_q_gamma,
    q_digamma,
    q_polygamma,
)
from .deriv import (
    N_MAX,
    LogDerivProvider,
    certify_lcm,
    ln_gamma_provider,
    log_derivatives,
    make_grid,
    ratio_provider,
)
from .roots import digamma_zero, q_euler_mascheroni, q_harmonic

__all__ = [
    "BALANCE_TOL",
    "DEFAULT_TOL",
    "TIGHT_MARGIN",
    "ZERO_MARGIN",
    "CLAIM_IDS",
    "RatioSpec",
    "VerifyReport",
    "verify_theorem_ratio_lcm",
    "ratio_log_middle",
    "verify_ineq_555",
    "verify_ineq_666",
    "psi_duplication_residual",
    "verify_psi_duplication",
    "beta_star",
    "ln_g_beta",
    "g_beta_log_deriv",
    "g_beta_provider",
    "verify_g_beta_lcm",
    "phi_series_coefficient",
    "verify_phi_coeff",
    "inv_digamma_provider",
    "verify_inv_digamma_lcm",
    "verify_ineq_1",
    "verify_ineq_010",
    "verify_remark_ineq",
    "verify_gamma_lcm_and_superadd",
    "run_claim",
]

BALANCE_TOL = 1e-12
DEFAULT_TOL = 1e-9
# a passing margin below this is flagged as tight rather than comfortable
TIGHT_MARGIN = 1e-6
# grid points must clear the digamma zero by at least this much
ZERO_MARGIN = 1e-3

DEFAULT_X_MIN = 0.05
DEFAULT_X_MAX = 20.0
DEFAULT_POINTS = 64
DEFAULT_SPACING = "geometric"

CLAIM_IDS = (
    "t31-ratio-lcm",
    "c-555",
    "c-666",
    "g-beta-lcm",
    "phi-coeff",
    "t34-inv-psi",
    "c-ineq-1",
    "c-ineq-010",
    "remark-harmonic",
    "gamma-lcm-superadd",
    "psi-duplication",
)


@dataclass(frozen=True)
class RatioSpec:
    """Parameters of the ratio Gamma_q(a x)^alpha / Gamma_q(b x)^beta.

    Requires 0 < a < b.  balanced() tests the exponent coupling
    alpha * a = beta * b that the monotonicity theorem turns on.
    """

    a: float
    b: float
    alpha: float
    beta: float

    def __post_init__(self) -> None:
        for name, v in (("a", self.a), ("b", self.b), ("alpha", self.alpha), ("beta", self.beta)):
            if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v):
                raise DomainError(f"{name} must be a finite real, got {v!r}")
        if not 0.0 < self.a < self.b:
            raise DomainError(f"need 0 < a < b, got a={self.a}, b={self.b}")

    def balanced(self) -> bool:
        return abs(self.alpha * self.a - self.beta * self.b) <= BALANCE_TOL


@dataclass(frozen=True)
class VerifyReport:
    """Per-claim verdict.

    worst_point and counterexample are row dicts with keys n_order, x,
    value, margin (n_order or x may be None when the claim is not indexed
    that way); extra pair coordinates ride in an "extra" sub-dict.
    passed is exactly (worst_margin >= -tol) over the examined points.
    """

    claim_id: str
    params: dict
    grid_summary: dict
    passed: bool
    worst_margin: float
    worst_point: dict | None
    counterexample: dict | None
    notes: tuple[str, ...]
    tol: float


def _finish(
    claim_id: str,
    params: dict,
    grid_summary: dict,
    rows: list[dict],
    tol: float,
    notes: tuple[str, ...] = (),
) -> VerifyReport:
    """Fold margin rows into a report; rows are scanned in append order."""
    notes = tuple(notes)
    if not rows:
        return VerifyReport(
            claim_id=claim_id,
            params=params,
            grid_summary=grid_summary,
            passed=True,
            worst_margin=0.0,
            worst_point=None,
            counterexample=None,
            notes=notes + ("no points examined",),
            tol=tol,
        )
    worst = min(rows, key=lambda r: r["margin"])
    counter = next((r for r in rows if r["margin"] < -tol), None)
    passed = counter is None
    if passed and worst["margin"] < TIGHT_MARGIN:
        notes = notes + (f"tight margin {worst['margin']:.3e}",)
    return VerifyReport(
        claim_id=claim_id,
        params=params,
        grid_summary=grid_summary,
        passed=passed,
        worst_margin=worst["margin"],
        worst_point=dict(worst),
        counterexample=dict(counter) if counter is not None else None,
        notes=notes,
        tol=tol,
    )


def _row(n_order, x, value, margin, extra=None) -> dict:
    r = {"n_order": n_order, "x": x, "value": value, "margin": margin}
    if extra:
        r["extra"] = dict(extra)
    return r


def _cm_rows(cm) -> list[dict]:
    """Summary and violation rows from a certify_lcm sweep; value is the
    raw log-derivative, margin its sign-adjusted version."""
    sign_w = -1.0 if cm.worst_order % 2 else 1.0
    rows = [_row(cm.worst_order, cm.worst_x, sign_w * cm.worst_margin, cm.worst_margin)]
    if cm.violation is not None:
        n, x, margin = cm.violation
        if (n, x) != (cm.worst_order, cm.worst_x):
            sign_v = -1.0 if n % 2 else 1.0
            rows.insert(0, _row(n, x, sign_v * margin, margin))
    return rows


def _grid_summary(grid: np.ndarray) -> dict:
    xs = np.asarray(grid, dtype=np.float64).ravel()
    return {"lo": float(xs.min()), "hi": float(xs.max()), "points": int(xs.size)}


def _default_grid() -> np.ndarray:
    return make_grid(DEFAULT_X_MIN, DEFAULT_X_MAX, DEFAULT_POINTS, DEFAULT_SPACING)


def _psi(p: QParam, k: int, x: float, t: Truncation) -> float:
    """psi^(k) with psi^(0) the digamma itself."""
    if k == 0:
        return q_digamma(p, x, t).value
    return q_polygamma(p, x, k, t).value


def _log_psi(p: QParam, x: float, t: Truncation) -> float:
    v = q_digamma(p, x, t).value
    if v <= 0.0:
        raise DomainError(f"psi_q({x}) = {v:.6g} is not positive; point left of the zero")
    return math.log(v)


# ---------------------------------------------------------------------------
# ratio of gamma powers: monotonicity and the derived two-sided bound

def verify_theorem_ratio_lcm(
    spec: RatioSpec,
    p: QParam,
    grid: np.ndarray | None = None,
    n_orders: int = N_MAX,
    tol: float = DEFAULT_TOL,
    trunc: Truncation | None = None,
) -> VerifyReport:
    """Log-complete-monotonicity of Gamma_q(ax)^alpha / Gamma_q(bx)^beta.

    Balanced exponents with alpha >= 0 take the sufficiency branch and are
    expected to pass.  Anything else takes the necessity scan, which hunts
    for a sign violation and is expected to find one when 0 < q < 1; for
    q > 1 the necessity direction is not asserted, so unbalanced input is
    reported as out of scope rather than scanned.
    """
    if grid is None:
        grid = _default_grid()
    params = {"q": p.q, "a": spec.a, "b": spec.b, "alpha": spec.alpha, "beta": spec.beta}
    sufficiency = spec.balanced() and spec.alpha >= 0.0
    if not sufficiency and p.regime is Regime.SUPER_UNIT:
        return _finish(
            "t31-ratio-lcm",
            params,
            _grid_summary(grid),
            [],
            tol,
            notes=("necessity scan skipped: only asserted for 0 < q < 1",),
        )
    provider = ratio_provider(p, spec.a, spec.b, spec.alpha, spec.beta, trunc)
    cm = certify_lcm(provider, grid, n_orders, tol)
    if sufficiency:
        notes = ("sufficiency branch: balanced exponents with alpha >= 0, expected pass",)
    else:
        notes = ("necessity branch: unbalanced exponents, expecting a violation",)
        if cm.passed:
            notes = notes + ("no violation on this grid; widen it or raise the order cap",)
    return _finish("t31-ratio-lcm", params, _grid_summary(grid), _cm_rows(cm), tol, notes)


def ratio_log_middle(
    spec: RatioSpec, p: QParam, x1: float, x: float, trunc: Truncation | None = None
) -> float:
    """Log of the normalized ratio appearing in the two-sided bound:
    alpha [lnG(ax) - lnG(ax1)] - beta [lnG(bx) - lnG(bx1)]."""
    t = trunc or DEFAULT_TRUNCATION
    return spec.alpha * (
        ln_q_gamma(p, spec.a * x, t).value - ln_q_gamma(p, spec.a * x1, t).value
    ) - spec.beta * (ln_q_gamma(p, spec.b * x, t).value - ln_q_gamma(p, spec.b * x1, t).value)


def verify_ineq_555(
    spec: RatioSpec,
    p: QParam,
    x1: float = 1.0,
    grid: np.ndarray | None = None,
    tol: float = DEFAULT_TOL,
    trunc: Truncation | None = None,
) -> VerifyReport:
    """Two-sided bound for the normalized ratio at balanced exponents.

    In log space: alpha a (x - x1) [psi(a x1) - psi(b x1)] <= ln(middle) <= 0
    for every grid x > x1, each side with slack tol.
    """
    if not spec.balanced():
        raise DomainError("the two-sided bound needs balanced exponents (alpha a = beta b)")
    if spec.alpha < 0.0 or spec.beta < 0.0:
        raise DomainError("the two-sided bound needs alpha, beta >= 0")
    if not (isinstance(x1, (int, float)) and math.isfinite(x1) and x1 > 0.0):
        raise DomainError(f"x1 must be a positive real, got {x1!r}")
    t = trunc or DEFAULT_TRUNCATION
    if grid is None:
        grid = x1 + np.geomspace(1e-4, 10.0, DEFAULT_POINTS)
    xs = [float(v) for v in np.asarray(grid, dtype=np.float64).ravel()]
    if any(v <= x1 for v in xs):
        raise DomainError("every grid point must lie strictly right of x1")
    slope = spec.alpha * spec.a * (
        q_digamma(p, spec.a * x1, t).value - q_digamma(p, spec.b * x1, t).value
    )
    rows = []
    for x in xs:
        mid = ratio_log_middle(spec, p, x1, x, t)
        lower = slope * (x - x1)
        rows.append(_row(None, x, mid, min(mid - lower, -mid)))
    params = {
        "q": p.q, "a": spec.a, "b": spec.b, "alpha": spec.alpha, "beta": spec.beta, "x1": x1,
    }
    return _finish("c-555", params, _grid_summary(np.asarray(xs)), rows, tol)


def verify_ineq_666(
    p: QParam,
    n_max: int = 20,
    tol: float = DEFAULT_TOL,
    trunc: Truncation | None = None,
) -> VerifyReport:
    """exp[2q(n-1) ln(q)/(1-q)] <= Gamma_q(n)^2 / Gamma_q(2n) <= 1 for
    integers n = 1..n_max, checked in log space."""
    if p.regime is not Regime.SUB_UNIT:
        raise DomainError("this bound is stated for 0 < q < 1")
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 1:
        raise DomainError(f"n_max must be an int >= 1, got {n_max!r}")
    t = trunc or DEFAULT_TRUNCATION
    lnq = math.log(p.q)
    rows = []
    for n in range(1, n_max + 1):
        mid = 2.0 * ln_q_gamma(p, float(n), t).value - ln_q_gamma(p, 2.0 * n, t).value
        lower = 2.0 * p.q * (n - 1) * lnq / (1.0 - p.q)
        rows.append(_row(n, None, mid, min(mid - lower, -mid)))
    params = {"q": p.q, "n_max": n_max}
    return _finish("c-666", params, {"n_max": n_max}, rows, tol)


# ---------------------------------------------------------------------------
# duplication identity and the exponentially corrected ratio square

def psi_duplication_residual(
    p: QParam, x: float, trunc: Truncation | None = None
) -> ResidualCheck:
    """|psi_q(2x) - ln(1+q) - psi_{q^2}(x)/2 - psi_{q^2}(x+1/2)/2| with its
    combined error budget.

    Both sides come from independent series, so a passing residual
    certifies the duplication identity at this point.
    """
    if p.regime is not Regime.SUB_UNIT:
        raise DomainError("the duplication identity is certified for 0 < q < 1")
    t = trunc or DEFAULT_TRUNCATION
    p2 = QParam(p.q * p.q, allow_near_one=p.allow_near_one)
    lhs = q_digamma(p, 2.0 * x, t)
    r1 = q_digamma(p2, x, t)
    r2 = q_digamma(p2, x + 0.5, t)
    c = math.log1p(p.q)
    residual = abs(lhs.value - c - 0.5 * r1.value - 0.5 * r2.value)
    budget = (
        lhs.err_bound
        + 0.5 * r1.err_bound
        + 0.5 * r2.err_bound
        + _fp_allowance(lhs.value, c, r1.value, r2.value)
    )
    return ResidualCheck(residual, budget)


def verify_psi_duplication(
    p: QParam,
    grid: np.ndarray | None = None,
    trunc: Truncation | None = None,
) -> VerifyReport:
    """Sweep the duplication residual; margin is budget - residual and the
    pass rule is margin >= 0, so every point must meet its own error
    budget with no extra slack."""
    if grid is None:
        grid = _default_grid()
    rows = []
    for x in np.asarray(grid, dtype=np.float64).ravel():
        rc = psi_duplication_residual(p, float(x), trunc)
        rows.append(_row(None, float(x), rc.residual, rc.budget - rc.residual))
    return _finish(
        "psi-duplication",
        {"q": p.q},
        _grid_summary(grid),
        rows,
        0.0,
        notes=("margin is error budget minus residual",),
    )


def beta_star(p: QParam) -> float:
    """Threshold -13 ln(q) / (6 (1 - q^2)) above which the corrected ratio
    square is certified monotone, for 0 < q < 1."""
    if p.regime is not Regime.SUB_UNIT:
        raise DomainError("beta_star takes 0 < q < 1")
    return -13.0 * math.log(p.q) / (6.0 * (1.0 - p.q * p.q))


def ln_g_beta(p: QParam, beta: float, x: float, trunc: Truncation | None = None) -> float:
    """Direct log of the exponentially corrected ratio square:
    -ln(1+q) + 2[lnG_{q^2}(x+1/2) - lnG_{q^2}(x+1)] + beta(1-q^2)q^{2x}/(2(1-q^{2x}))
    + psi_q(2x).

    Deliberately avoids the duplication substitution so finite differences
    of this value cross-check g_beta_log_deriv.
    """
    if p.regime is not Regime.SUB_UNIT:
        raise DomainError("the corrected ratio square is stated for 0 < q < 1")
    if not x > 0.0:
        raise DomainError(f"x must be positive, got {x}")
    t = trunc or DEFAULT_TRUNCATION
    p2 = QParam(p.q * p.q, allow_near_one=p.allow_near_one)
    e = math.exp(2.0 * x * math.log(p.q))
    frac = e / (1.0 - e)
    return (
        -math.log1p(p.q)
        + 2.0 * (ln_q_gamma(p2, x + 0.5, t).value - ln_q_gamma(p2, x + 1.0, t).value)
        + 0.5 * beta * (1.0 - p.q * p.q) * frac
        + q_digamma(p, 2.0 * x, t).value
    )


def g_beta_log_deriv(
    p: QParam, beta: float, n: int, x: float, trunc: Truncation | None = None
) -> float:
    """n-th derivative of ln g_beta, assembled analytically.

    Uses the duplication identity to trade psi_q(2x) for half-argument
    psi_{q^2} terms, and the digamma recurrence to express the derivative
    of q^{2x}/(1-q^{2x}) through psi_{q^2} differences:

        2 psi^(n-1)(x+1/2) - 2 psi^(n-1)(x+1)
        + psi^(n)(x)/2 + psi^(n)(x+1/2)/2
        - beta (1-q^2)/2 * [psi^(n)(x+1) - psi^(n)(x)] / ln(q^2)

    with every psi taken at base q^2 and psi^(0) the digamma.
    """
    if p.regime is not Regime.SUB_UNIT:
        raise DomainError("the corrected ratio square is stated for 0 < q < 1")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"derivative order must be an int >= 1, got {n!r}")
    if not x > 0.0:
        raise DomainError(f"x must be positive, got {x}")
    t = trunc or DEFAULT_TRUNCATION
    p2 = QParam(p.q * p.q, allow_near_one=p.allow_near_one)
    ln_q2 = 2.0 * math.log(p.q)
    dfrac = -(_psi(p2, n, x + 1.0, t) - _psi(p2, n, x, t)) / ln_q2
    return (
        2.0 * (_psi(p2, n - 1, x + 0.5, t) - _psi(p2, n - 1, x + 1.0, t))
        + 0.5 * _psi(p2, n, x, t)
        + 0.5 * _psi(p2, n, x + 0.5, t)
        + 0.5 * beta * (1.0 - p.q * p.q) * dfrac
    )


def g_beta_provider(p: QParam, beta: float, trunc: Truncation | None = None) -> LogDerivProvider:
    def d(n: int, x: float) -> float:
        return g_beta_log_deriv(p, beta, n, x, trunc)

    return LogDerivProvider(d=d, lo=0.0, hi=math.inf, name=f"g_beta(q={p.q:g}, beta={beta:g})")


def verify_g_beta_lcm(
    p: QParam,
    beta: float | None = None,
    grid: np.ndarray | None = None,
    n_orders: int = N_MAX,
    tol: float = DEFAULT_TOL,
    trunc: Truncation | None = None,
) -> VerifyReport:
    """Alternating-sign certification for ln g_beta; beta defaults to the
    threshold beta_star(q), the smallest certified value.

    The duplication identity is re-certified on a subsample of the grid
    first, since the analytic derivatives lean on it; a gate failure
    fails the claim without running the sweep.
    """
    if grid is None:
        grid = _default_grid()
    b = beta_star(p) if beta is None else float(beta)
    params = {"q": p.q, "beta": b}
    xs = np.asarray(grid, dtype=np.float64).ravel()
    gate = xs[:: max(1, xs.size // 8)]
    for x in gate:
        rc = psi_duplication_residual(p, float(x), trunc)
        if not rc.passed:
            return _finish(
                "g-beta-lcm",
                params,
                _grid_summary(grid),
                [_row(None, float(x), rc.residual, rc.budget - rc.residual)],
                tol,
                notes=("duplication gate failed; sweep not run",),
            )
    cm = certify_lcm(g_beta_provider(p, b, trunc), grid, n_orders, tol)
    notes = (f"duplication gate passed on {gate.size} points",)
    return _finish("g-beta-lcm", params, _grid_summary(grid), _cm_rows(cm), tol, notes)


def phi_series_coefficient(beta: float, p: QParam, n: int) -> float:
    """Coefficient c_n = -beta(1-q^2)/(2 ln q) - 1 - 2^{-n} + 1/((n+1) 2^{n-1})
    from the series whose nonnegativity drives the g_beta certification."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"n must be an int >= 1, got {n!r}")
    q = p.q
    return (
        -beta * (1.0 - q * q) / (2.0 * math.log(q))
        - 1.0
        - 0.5**n
        + 1.0 / ((n + 1) * 2 ** (n - 1))
    )


def verify_phi_coeff(
    p: QParam,
    beta: float | None = None,
    n_max: int = 200,
    tol: float = DEFAULT_TOL,
) -> VerifyReport:
    """c_n >= 0 for n = 1..n_max; beta defaults to beta_star(q), where the
    minimum sits exactly at zero (index n = 2)."""
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 1:
        raise DomainError(f"n_max must be an int >= 1, got {n_max!r}")
    b = beta_star(p) if beta is None else float(beta)
    rows = []
    for n in range(1, n_max + 1):
        c_n = phi_series_coefficient(b, p, n)
        rows.append(_row(n, None, c_n, c_n))
    return _finish("phi-coeff", {"q": p.q, "beta": b}, {"n_max": n_max}, rows, tol)


# ---------------------------------------------------------------------------
# right of the digamma zero: reciprocal monotonicity and mean inequalities

def inv_digamma_provider(
    p: QParam, trunc: Truncation | None = None
) -> tuple[LogDerivProvider, float]:
    """Provider for ln(1/psi_q) on (x0, inf), plus the located x0.

    Derivatives of ln psi_q come from psi_q and its analytic derivatives
    through the log-derivative triangle; the sign flip gives 1/psi_q.
    """
    t = trunc or DEFAULT_TRUNCATION
    z = digamma_zero(p, trunc=t)

    def d(n: int, x: float) -> float:
        values = [_psi(p, k, x, t) for k in range(0, n + 1)]
        return -log_derivatives(values)[n - 1]

    provider = LogDerivProvider(d=d, lo=z.x0, hi=math.inf, name=f"inv_digamma(q={p.q:g})")
    return provider, z.x0


def verify_inv_digamma_lcm(
    p: QParam,
    grid: np.ndarray | None = None,
    n_orders: int = 4,
    tol: float = DEFAULT_TOL,
    trunc: Truncation | None = None,
) -> VerifyReport:
    """Alternating-sign certification for ln(1/psi_q) right of the zero.

    The grid must clear x0 by ZERO_MARGIN; the default covers
    [x0 + 0.1, 20].
    """
    provider, x0 = inv_digamma_provider(p, trunc)
    if grid is None:
        grid = make_grid(x0 + 0.1, DEFAULT_X_MAX, DEFAULT_POINTS, DEFAULT_SPACING)
    xs = np.asarray(grid, dtype=np.float64).ravel()
    if float(xs.min()) < x0 + ZERO_MARGIN:
        raise DomainError(
            f"grid reaches {float(xs.min()):.6g}, inside the {ZERO_MARGIN:g} margin of x0 = {x0:.6g}"
        )
    cm = certify_lcm(provider, xs, n_orders, tol)
    return _finish(
        "t34-inv-psi",
        {"q": p.q, "x0": x0},
        _grid_summary(xs),
        _cm_rows(cm),
        tol,
        notes=(f"zero located at x0 = {x0!r}",),
    )


def verify_ineq_1(
    p: QParam,
    a: float,
    x: float,
    y: float,
    tol: float = DEFAULT_TOL,
    trunc: Truncation | None = None,
) -> VerifyReport:
    """psi(x)^{1/a} psi(y)^{1-1/a} <= psi(x/a + (1-1/a)y) for x, y > x0, a > 1.

    Checked in log space at the single point (x, y); the mixed argument is
    a convex combination, so it stays right of the zero automatically.
    """
    if not a > 1.0:
        raise DomainError(f"a must exceed 1, got {a}")
    t = trunc or DEFAULT_TRUNCATION
    z = digamma_zero(p, trunc=t)
    for name, v in (("x", x), ("y", y)):
        if not v > z.x0:
            raise DomainError(f"{name} = {v} is not right of the digamma zero {z.x0:.6g}")
    mix = x / a + (1.0 - 1.0 / a) * y
    margin = _log_psi(p, mix, t) - (_log_psi(p, x, t) / a + (1.0 - 1.0 / a) * _log_psi(p, y, t))
    rows = [_row(None, x, margin, margin, extra={"y": y})]
    params = {"q": p.q, "a": a, "x": x, "y": y, "x0": z.x0}
    return _finish("c-ineq-1", params, {"points": 1}, rows, tol)


def verify_ineq_010(
    p: QParam,
    a: float,
    u: float,
    tol: float = DEFAULT_TOL,
    trunc: Truncation | None = None,
) -> VerifyReport:
    """psi(2)^{a-1} <= psi(u+1)^a / psi(a(u-1)+2) for a > 1, in log space.

    All three psi arguments must sit right of the zero so the real powers
    exist; u and the derived argument a(u-1)+2 are both checked.
    """
    if not a > 1.0:
        raise DomainError(f"a must exceed 1, got {a}")
    t = trunc or DEFAULT_TRUNCATION
    z = digamma_zero(p, trunc=t)
    if not u > 1.0 - 2.0 / a:
        raise DomainError(f"u = {u} violates u > 1 - 2/a = {1.0 - 2.0 / a:.6g}")
    arg = a * (u - 1.0) + 2.0
    if not (u + 1.0 > z.x0 and arg > z.x0):
        raise DomainError(
            f"psi arguments u+1 = {u + 1.0:.6g}, a(u-1)+2 = {arg:.6g} must clear x0 = {z.x0:.6g}"
        )
    margin = a * _log_psi(p, u + 1.0, t) - _log_psi(p, arg, t) - (a - 1.0) * _log_psi(p, 2.0, t)
    rows = [_row(None, u, margin, margin)]
    params = {"q": p.q, "a": a, "u": u, "x0": z.x0}
    return _finish("c-ineq-010", params, {"points": 1}, rows, tol)


def verify_remark_ineq(
    p: QParam,
    n_max: int = 20,
    tol: float = DEFAULT_TOL,
    trunc: Truncation | None = None,
) -> VerifyReport:
    """psi(2)^2 psi(2n) <= [ln(q)/(1-q) gamma_q - ln(q) H_{n,q}]^2 for
    n = 1..n_max, 0 < q < 1.

    The bracket is evaluated exactly as stated, from the q-analogue of the
    Euler-Mascheroni constant and the q-harmonic numbers; a cross-check
    confirms it reproduces psi(n+1) before the margins are trusted.
    """
    if p.regime is not Regime.SUB_UNIT:
        raise DomainError("this bound is stated for 0 < q < 1")
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 1:
        raise DomainError(f"n_max must be an int >= 1, got {n_max!r}")
    t = trunc or DEFAULT_TRUNCATION
    lnq = math.log(p.q)
    gamma_q = q_euler_mascheroni(p, t)
    psi2 = q_digamma(p, 2.0, t).value
    notes: tuple[str, ...] = ()
    rows = []
    for n in range(1, n_max + 1):
        inner = lnq / (1.0 - p.q) * gamma_q - lnq * q_harmonic(p, n)
        direct = q_digamma(p, float(n + 1), t)
        drift = abs(inner - direct.value)
        allowance = direct.err_bound + _fp_allowance(inner, direct.value)
        if drift > allowance and not notes:
            notes = (f"bracket identity drift {drift:.3e} at n={n} exceeds {allowance:.3e}",)
        lhs = psi2 * psi2 * q_digamma(p, 2.0 * n, t).value
        margin = inner * inner - lhs
        rows.append(_row(n, None, margin, margin))
    return _finish("remark-harmonic", {"q": p.q, "n_max": n_max}, {"n_max": n_max}, rows, tol, notes)


def verify_gamma_lcm_and_superadd(
    p: QParam,
    grid_x: np.ndarray | None = None,
    grid_lcm: np.ndarray | None = None,
    n_orders: int = N_MAX,
    tol: float = DEFAULT_TOL,
    trunc: Truncation | None = None,
) -> VerifyReport:
    """Two-part claim: ln Gamma_q alternates signs on (0, x0), and
    Gamma_q(x+1) Gamma_q(y+1) <= Gamma_q(x+y+2) over (0,1)^2 in log space.

    Pass grid_x with zero points to skip the pair part, or grid_lcm with
    zero points to skip the monotonicity part.
    """
    t = trunc or DEFAULT_TRUNCATION
    z = digamma_zero(p, trunc=t)
    if grid_lcm is None:
        grid_lcm = make_grid(DEFAULT_X_MIN, z.x0 - ZERO_MARGIN, DEFAULT_POINTS, DEFAULT_SPACING)
    if grid_x is None:
        grid_x = make_grid(0.0, 1.0, 12, "linear")
    lcm_xs = np.asarray(grid_lcm, dtype=np.float64).ravel()
    pair_xs = [float(v) for v in np.asarray(grid_x, dtype=np.float64).ravel()]
    rows: list[dict] = []
    notes: tuple[str, ...] = ()
    if lcm_xs.size:
        if float(lcm_xs.max()) >= z.x0:
            raise DomainError(
                f"monotonicity grid reaches {float(lcm_xs.max()):.6g}, not left of x0 = {z.x0:.6g}"
            )
        cm = certify_lcm(ln_gamma_provider(p, t), lcm_xs, n_orders, tol)
        rows.extend(_cm_rows(cm))
        notes = notes + (f"monotonicity part: orders 1..{n_orders} on (0, x0), x0 = {z.x0!r}",)
    if pair_xs:
        if not all(0.0 < v < 1.0 for v in pair_xs):
            raise DomainError("pair grid must lie inside (0, 1)")
        for x in pair_xs:
            lx = ln_q_gamma(p, x + 1.0, t).value
            for y in pair_xs:
                margin = (
                    ln_q_gamma(p, x + y + 2.0, t).value
                    - lx
                    - ln_q_gamma(p, y + 1.0, t).value
                )
                rows.append(_row(None, x, margin, margin, extra={"y": y}))
        notes = notes + (f"superadditivity part: {len(pair_xs) ** 2} pairs in (0,1)^2",)
    params = {"q": p.q, "x0": z.x0}
    summary = {
        "lcm_points": int(lcm_xs.size),
        "pair_points": len(pair_xs),
    }
    return _finish("gamma-lcm-superadd", params, summary, rows, tol, notes)


# ---------------------------------------------------------------------------
# claim dispatch

def _subsample(xs: list[float], count: int) -> list[float]:
    if len(xs) <= count:
        return xs
    idx = np.linspace(0, len(xs) - 1, count).round().astype(int)
    return [xs[i] for i in idx]


def _merge_reports(claim_id, params, grid_summary, reports, tol, notes=()) -> VerifyReport:
    """Aggregate single-point reports (pair/point sweeps) into one claim
    report, keeping each sub-report's row augmented with its coordinates."""
    rows = []
    for r in reports:
        if r.worst_point is not None:
            rows.append(r.worst_point)
    return _finish(claim_id, params, grid_summary, rows, tol, notes)


def run_claim(
    claim_id: str,
    p: QParam,
    *,
    x: float | None = None,
    x_min: float | None = None,
    x_max: float | None = None,
    points: int | None = None,
    spacing: str | None = None,
    a: float | None = None,
    b: float | None = None,
    alpha: float | None = None,
    beta: float | None = None,
    n_max: int | None = None,
    orders: int | None = None,
    tol: float | None = None,
    trunc: Truncation | None = None,
) -> VerifyReport:
    """Run one registered claim with sweep defaults.

    x switches to single-point mode.  For the paired claims (c-ineq-1 and
    the superadditivity part of gamma-lcm-superadd) the second coordinate
    rides in b when x is given.  Claims indexed by an integer use n_max;
    derivative sweeps use orders.
    """
    if claim_id not in CLAIM_IDS:
        raise DomainError(f"unknown claim id {claim_id!r}; known: {', '.join(CLAIM_IDS)}")
    tol = DEFAULT_TOL if tol is None else tol
    lo = DEFAULT_X_MIN if x_min is None else x_min
    hi = DEFAULT_X_MAX if x_max is None else x_max
    pts = DEFAULT_POINTS if points is None else points
    sp = DEFAULT_SPACING if spacing is None else spacing

    def sweep_grid() -> np.ndarray:
        if x is not None:
            return np.asarray([float(x)], dtype=np.float64)
        return make_grid(lo, hi, pts, sp)

    if claim_id == "t31-ratio-lcm":
        spec = RatioSpec(
            1.0 if a is None else a,
            2.0 if b is None else b,
            2.0 if alpha is None else alpha,
            1.0 if beta is None else beta,
        )
        return verify_theorem_ratio_lcm(
            spec, p, sweep_grid(), N_MAX if orders is None else orders, tol, trunc
        )

    if claim_id == "c-555":
        spec = RatioSpec(
            1.0 if a is None else a,
            2.0 if b is None else b,
            2.0 if alpha is None else alpha,
            1.0 if beta is None else beta,
        )
        x1 = 1.0
        if x is not None:
            grid = np.asarray([float(x)], dtype=np.float64)
        else:
            grid = x1 + np.geomspace(1e-4, max(hi - x1, 1e-3), pts)
        return verify_ineq_555(spec, p, x1, grid, tol, trunc)

    if claim_id == "c-666":
        return verify_ineq_666(p, 20 if n_max is None else n_max, tol, trunc)

    if claim_id == "psi-duplication":
        return verify_psi_duplication(p, sweep_grid(), trunc)

    if claim_id == "g-beta-lcm":
        return verify_g_beta_lcm(
            p, beta, sweep_grid(), N_MAX if orders is None else orders, tol, trunc
        )

    if claim_id == "phi-coeff":
        return verify_phi_coeff(p, beta, 200 if n_max is None else n_max, tol)

    if claim_id == "t34-inv-psi":
        n_orders = 4 if orders is None else orders
        if x is not None:
            return verify_inv_digamma_lcm(
                p, np.asarray([float(x)], dtype=np.float64), n_orders, tol, trunc
            )
        z = digamma_zero(p, trunc=trunc or DEFAULT_TRUNCATION)
        lo_eff = x_min if x_min is not None else z.x0 + 0.1
        clipped = False
        if lo_eff < z.x0 + ZERO_MARGIN:
            lo_eff = z.x0 + 0.1
            clipped = True
        if not lo_eff < hi:
            raise DomainError(f"x range ({lo_eff:.6g}, {hi:.6g}) empty right of x0 = {z.x0:.6g}")
        report = verify_inv_digamma_lcm(p, make_grid(lo_eff, hi, pts, sp), n_orders, tol, trunc)
        if clipped:
            report = replace(report, notes=report.notes + ("x range clipped right of the digamma zero",))
        return report

    if claim_id == "c-ineq-1":
        a_eff = 2.0 if a is None else a
        t = trunc or DEFAULT_TRUNCATION
        z = digamma_zero(p, trunc=t)
        if x is not None:
            y = float(b) if b is not None else float(x)
            return verify_ineq_1(p, a_eff, float(x), y, tol, trunc)
        base = make_grid(max(lo, z.x0 + 0.1), hi, pts, sp)
        pts_list = _subsample([float(v) for v in base], 8)
        reports = []
        for xi in pts_list:
            for yj in pts_list:
                if xi == yj:
                    continue
                reports.append(verify_ineq_1(p, a_eff, xi, yj, tol, trunc))
        params = {"q": p.q, "a": a_eff, "x0": z.x0}
        summary = {"pairs": len(reports), "lo": pts_list[0], "hi": pts_list[-1]}
        return _merge_reports(
            "c-ineq-1", params, summary, reports, tol,
            notes=("pair sweep over an 8-point subgrid right of the zero",),
        )

    if claim_id == "c-ineq-010":
        a_eff = 2.0 if a is None else a
        t = trunc or DEFAULT_TRUNCATION
        z = digamma_zero(p, trunc=t)
        if x is not None:
            return verify_ineq_010(p, a_eff, float(x), tol, trunc)
        candidates = [float(v) for v in make_grid(lo, hi, pts, sp)]
        kept, excluded = [], 0
        for u in candidates:
            arg = a_eff * (u - 1.0) + 2.0
            if u > 1.0 - 2.0 / a_eff and u + 1.0 > z.x0 + ZERO_MARGIN and arg > z.x0 + ZERO_MARGIN:
                kept.append(u)
            else:
                excluded += 1
        reports = [verify_ineq_010(p, a_eff, u, tol, trunc) for u in kept]
        notes = ()
        if excluded:
            notes = (f"{excluded} grid points precondition-excluded",)
        params = {"q": p.q, "a": a_eff, "x0": z.x0}
        summary = {"candidates": len(candidates), "kept": len(kept)}
        return _merge_reports("c-ineq-010", params, summary, reports, tol, notes)

    if claim_id == "remark-harmonic":
        return verify_remark_ineq(p, 20 if n_max is None else n_max, tol, trunc)

    if claim_id == "gamma-lcm-superadd":
        n_orders = N_MAX if orders is None else orders
        if x is not None:
            if b is not None:
                # single ordered pair (x, b) of the superadditivity part
                xv, yv = float(x), float(b)
                if not (0.0 < xv < 1.0 and 0.0 < yv < 1.0):
                    raise DomainError(f"pair ({xv}, {yv}) must lie inside (0, 1)^2")
                t = trunc or DEFAULT_TRUNCATION
                margin = (
                    ln_q_gamma(p, xv + yv + 2.0, t).value
                    - ln_q_gamma(p, xv + 1.0, t).value
                    - ln_q_gamma(p, yv + 1.0, t).value
                )
                rows = [_row(None, xv, margin, margin, extra={"y": yv})]
                return _finish(
                    "gamma-lcm-superadd", {"q": p.q}, {"pair_points": 1}, rows, tol,
                    notes=("single superadditivity pair",),
                )
            return verify_gamma_lcm_and_superadd(
                p, np.asarray([], dtype=np.float64),
                np.asarray([float(x)], dtype=np.float64), n_orders, tol, trunc,
            )
        return verify_gamma_lcm_and_superadd(p, None, None, n_orders, tol, trunc)

    raise DomainError(f"claim {claim_id!r} has no handler")
