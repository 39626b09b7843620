"""Evaluation core for the q-gamma / q-digamma family.

Every series here is truncated against an analytic tail majorant, never on
consecutive-term smallness, and each evaluator returns the majorant at the
stopping index alongside the value.  Sub-unit q (0 < q < 1) is the native
regime; super-unit q evaluates its own product/series forms so the classical
inversion identities remain genuine cross-checks rather than definitions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "DomainError",
    "NonConvergent",
    "UnsupportedOrder",
    "Regime",
    "QParam",
    "Truncation",
    "EvalResult",
    "ResidualCheck",
    "DEFAULT_TRUNCATION",
    "MAX_DERIV_ORDER",
    "NEAR_ONE_GUARD",
    "q_gamma",
    "ln_q_gamma",
    "q_digamma",
    "q_polygamma",
    "q_bracket",
    "gamma_inversion_residual",
    "digamma_inversion_residual",
]

NEAR_ONE_GUARD = 1e-4
MAX_DERIV_ORDER = 8

# exp() overflows just above this; q_gamma refuses to silently return inf
_LN_MAX = 709.0
# below this exponent exp() underflows to 0.0, which is an honest bound here
_LN_TINY = -745.0

_CHUNK_START = 64
_CHUNK_LIMIT = 65536


class DomainError(ValueError):
    """Argument outside the function's domain."""


class NonConvergent(ArithmeticError):
    """Term cap reached before the tail majorant met the truncation target."""


class UnsupportedOrder(ValueError):
    """Derivative order outside the supported range."""


class Regime(Enum):
    SUB_UNIT = "sub_unit"
    SUPER_UNIT = "super_unit"


@dataclass(frozen=True)
class QParam:
    """Deformation parameter with its regime guard.

    q must be a positive real other than 1.  Values with |q - 1| < 1e-4 are
    rejected by default because term counts scale like 1/|ln q| there; pass
    allow_near_one=True (and, if needed, a raised term cap) to evaluate
    close to the classical limit.
    """

    q: float
    allow_near_one: bool = False

    def __post_init__(self) -> None:
        q = self.q
        if not isinstance(q, (int, float)) or isinstance(q, bool) or not math.isfinite(q):
            raise DomainError(f"q must be a finite real, got {q!r}")
        if q <= 0.0:
            raise DomainError(f"q must be positive, got {q}")
        if q == 1.0:
            raise DomainError("q = 1 is the classical limit; it is not evaluable here")
        if abs(q - 1.0) < NEAR_ONE_GUARD and not self.allow_near_one:
            raise DomainError(
                f"|q - 1| = {abs(q - 1.0):.3e} is inside the near-one guard "
                f"({NEAR_ONE_GUARD:g}); pass allow_near_one=True to override"
            )
        object.__setattr__(self, "q", float(q))

    @property
    def regime(self) -> Regime:
        return Regime.SUB_UNIT if self.q < 1.0 else Regime.SUPER_UNIT

    def inverted(self) -> "QParam":
        """The parameter for 1/q; used by the super-unit derivative route."""
        return QParam(1.0 / self.q, allow_near_one=self.allow_near_one)


@dataclass(frozen=True)
class Truncation:
    """Stopping policy for the series engines.

    Summation stops once the tail majorant drops below
    max(rel_tol * |value assembled so far|, abs_tol).
    """

    rel_tol: float = 1e-13
    abs_tol: float = 1e-300
    max_terms: int = 10_000_000

    def __post_init__(self) -> None:
        if not (0.0 < self.rel_tol < 1.0):
            raise DomainError(f"rel_tol must lie in (0, 1), got {self.rel_tol}")
        if not (0.0 <= self.abs_tol < math.inf):
            raise DomainError(f"abs_tol must be finite and >= 0, got {self.abs_tol}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")

    def target(self, value_estimate: float) -> float:
        return max(self.rel_tol * abs(value_estimate), self.abs_tol)


DEFAULT_TRUNCATION = Truncation()


@dataclass(frozen=True)
class EvalResult:
    """A value, the tail majorant at the stopping index, and the term count.

    err_bound covers truncation only; floating-point rounding rides on top
    and is accounted for separately by the identity-residual checks.
    """

    value: float
    err_bound: float
    terms: int


@dataclass(frozen=True)
class ResidualCheck:
    """An identity residual next to its error budget.

    The budget combines the truncation bounds of each side with a small
    floating-point allowance proportional to the operand magnitudes.
    """

    residual: float
    budget: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.budget


def _check_x(x: float) -> float:
    if not isinstance(x, (int, float)) or isinstance(x, bool) or not math.isfinite(x):
        raise DomainError(f"x must be a finite real, got {x!r}")
    if x <= 0.0:
        raise DomainError(f"x must be positive, got {x}")
    return float(x)


def _fp_allowance(*magnitudes: float) -> float:
    return 1e-13 * (1.0 + math.fsum(abs(m) for m in magnitudes))


def _lambert_tail(q: float, x: float, n: int, last_k: int) -> float:
    """Majorant for sum_{k > last_k} k^n q^{kx} / (1 - q^k), 0 < q < 1.

    Uses 1 - q^k >= 1 - q and the term-ratio envelope
    ((k+1)/k)^n q^x <= rho, evaluated at k = last_k + 1.
    """
    lnq = math.log(q)
    log_r = x * lnq
    rho = ((last_k + 2) / (last_k + 1)) ** n * math.exp(log_r)
    if rho >= 1.0:
        return math.inf
    log_first = n * math.log(last_k + 1) + (last_k + 1) * log_r
    if log_first < _LN_TINY:
        return 0.0
    return math.exp(log_first) / ((1.0 - q) * (1.0 - rho))


def _lambert_sum(
    q: float, x: float, n: int, trunc: Truncation, offset: float, scale: float
) -> tuple[float, float, int]:
    """Chunked sum of k^n q^{kx} / (1 - q^k) over k >= 1, for 0 < q < 1.

    The caller assembles the final value as offset + scale * partial; the
    stop rule therefore compares |scale| * tail against the truncation
    target taken at that assembled value.
    """
    lnq = math.log(q)
    chunk_sums: list[float] = []
    k0 = 1
    chunk = _CHUNK_START
    while k0 <= trunc.max_terms:
        k1 = min(k0 + chunk - 1, trunc.max_terms)
        k = np.arange(k0, k1 + 1, dtype=np.float64)
        num = np.exp(k * (x * lnq))
        if n:
            num = num * k**n
        den = -np.expm1(k * lnq)
        chunk_sums.append(float(np.sum(num / den)))
        partial = math.fsum(chunk_sums)
        tail = _lambert_tail(q, x, n, k1)
        if abs(scale) * tail <= trunc.target(offset + scale * partial):
            return partial, tail, k1
        k0 = k1 + 1
        chunk = min(chunk * 2, _CHUNK_LIMIT)
    raise NonConvergent(
        f"term cap {trunc.max_terms} reached before the tail target (q={q}, x={x}, order={n})"
    )


def _logprod_tail(q: float, x: float, next_j: int) -> float:
    """Majorant for sum_{j >= next_j} |ln(1-q^{j+1}) - ln(1-q^{j+x})|.

    With m = min(1, x): |q^x - q| <= q^m and 1 - q^{j+x} >= 1 - q^m give the
    per-term bound D_j = q^{j+m}/(1-q^m); |ln(1+d)| <= 2|d| once D_j <= 1/2.
    """
    lnq = math.log(q)
    m = min(1.0, x)
    one_minus_qm = -math.expm1(m * lnq)
    log_d = (next_j + m) * lnq - math.log(one_minus_qm)
    if log_d > math.log(0.5):
        return math.inf
    if log_d < _LN_TINY:
        return 0.0
    return 2.0 * math.exp(log_d) / (1.0 - q)


def _logprod_sum(
    q: float,
    x: float,
    trunc: Truncation,
    offset: float,
    stop_target: float | None = None,
) -> tuple[float, float, int]:
    """Chunked sum of ln(1-q^{j+1}) - ln(1-q^{j+x}) over j >= 0, 0 < q < 1.

    stop_target, when given, is an absolute target on the log scale; the
    exponentiated gamma uses it so its bound stays relative on the gamma
    scale even when |ln value| is large.
    """
    lnq = math.log(q)
    chunk_sums: list[float] = []
    j0 = 0
    chunk = _CHUNK_START
    while j0 < trunc.max_terms:
        j1 = min(j0 + chunk - 1, trunc.max_terms - 1)
        j = np.arange(j0, j1 + 1, dtype=np.float64)
        a = -np.expm1((j + 1.0) * lnq)
        b = -np.expm1((j + x) * lnq)
        chunk_sums.append(float(np.sum(np.log(a) - np.log(b))))
        partial = math.fsum(chunk_sums)
        tail = _logprod_tail(q, x, j1 + 1)
        if stop_target is not None:
            target = max(stop_target, trunc.abs_tol)
        else:
            target = trunc.target(offset + partial)
        if tail <= target:
            return partial, tail, j1 + 1
        j0 = j1 + 1
        chunk = min(chunk * 2, _CHUNK_LIMIT)
    raise NonConvergent(
        f"term cap {trunc.max_terms} reached before the tail target (q={q}, x={x})"
    )


def _ln_gamma_parts(p: QParam, x: float) -> tuple[float, float]:
    """(closed-form prefactor, base of the product series) for ln Gamma_q."""
    q = p.q
    if p.regime is Regime.SUB_UNIT:
        return (1.0 - x) * math.log1p(-q), q
    pre = (1.0 - x) * math.log(q - 1.0) + 0.5 * x * (x - 1.0) * math.log(q)
    return pre, 1.0 / q


def ln_q_gamma(p: QParam, x: float, trunc: Truncation | None = None) -> EvalResult:
    """Natural log of the q-gamma function at x > 0.

    Sub-unit q sums the log of the defining product directly.  Super-unit q
    sums its own product form, which carries the explicit q^{x(x-1)/2}
    prefactor; the two regimes share no closed-form shortcut, so the
    inversion residual stays a meaningful consistency check.
    """
    x = _check_x(x)
    t = trunc or DEFAULT_TRUNCATION
    pre, base = _ln_gamma_parts(p, x)
    s, tail, terms = _logprod_sum(base, x, t, offset=pre)
    return EvalResult(pre + s, tail, terms)


def q_gamma(p: QParam, x: float, trunc: Truncation | None = None) -> EvalResult:
    """q-gamma function at x > 0.

    Evaluated as exp of the log form with an absolute truncation target on
    the log scale, so err_bound stays relative on the gamma scale.  Raises
    OverflowError when the value exceeds the double range.
    """
    x = _check_x(x)
    t = trunc or DEFAULT_TRUNCATION
    pre, base = _ln_gamma_parts(p, x)
    s, tail, terms = _logprod_sum(base, x, t, offset=pre, stop_target=0.5 * t.rel_tol)
    ln_value = pre + s
    if ln_value > _LN_MAX:
        raise OverflowError(f"q_gamma overflows the double range: ln value = {ln_value:.6g}")
    value = math.exp(ln_value)
    err = value * math.expm1(tail) if tail < 1.0 else math.inf
    return EvalResult(value, err, terms)


def q_digamma(p: QParam, x: float, trunc: Truncation | None = None) -> EvalResult:
    """q-digamma (logarithmic derivative of the q-gamma) at x > 0.

    Sub-unit q: -ln(1-q) + ln q * sum_{k>=1} q^{kx}/(1-q^k), tail bounded by
    |ln q| q^{(K+1)x} / ((1-q)(1-q^x)).  Super-unit q uses the mirrored
    series -ln(q-1) + ln q [x - 1/2 - sum_{k>=1} q^{-kx}/(1-q^{-k})].
    """
    x = _check_x(x)
    t = trunc or DEFAULT_TRUNCATION
    q = p.q
    lnq = math.log(q)
    if p.regime is Regime.SUB_UNIT:
        head = -math.log1p(-q)
        s, tail, terms = _lambert_sum(q, x, 0, t, offset=head, scale=lnq)
        return EvalResult(head + lnq * s, abs(lnq) * tail, terms)
    head = -math.log(q - 1.0) + lnq * (x - 0.5)
    s, tail, terms = _lambert_sum(1.0 / q, x, 0, t, offset=head, scale=-lnq)
    return EvalResult(head - lnq * s, lnq * tail, terms)


def q_polygamma(p: QParam, x: float, n: int, trunc: Truncation | None = None) -> EvalResult:
    """n-th derivative of the q-digamma at x > 0, for 1 <= n <= 8.

    Sub-unit q: (ln q)^{n+1} sum_{k>=1} k^n q^{kx}/(1-q^k), the term-by-term
    derivative of the digamma series.  The sum runs over all k; a finite
    upper limit tied to n (which sometimes appears in print) is not the
    derivative and would break the sign pattern (-1)^{n+1}.  Super-unit q
    transfers derivatives from 1/q; only n = 1 picks up the extra ln q from
    the linear term relating the two regimes.
    """
    x = _check_x(x)
    if not isinstance(n, int) or isinstance(n, bool):
        raise UnsupportedOrder(f"derivative order must be an int, got {n!r}")
    if not 1 <= n <= MAX_DERIV_ORDER:
        raise UnsupportedOrder(f"derivative order {n} outside 1..{MAX_DERIV_ORDER}")
    t = trunc or DEFAULT_TRUNCATION
    if p.regime is Regime.SUPER_UNIT:
        base = q_polygamma(p.inverted(), x, n, t)
        if n == 1:
            return EvalResult(base.value + math.log(p.q), base.err_bound, base.terms)
        return base
    lnq = math.log(p.q)
    scale = lnq ** (n + 1)
    s, tail, terms = _lambert_sum(p.q, x, n, t, offset=0.0, scale=scale)
    return EvalResult(scale * s, abs(scale) * tail, terms)


def q_bracket(p: QParam, x: float) -> float:
    """q-bracket [x]_q = (1-q^x)/(1-q), the ratio Gamma_q(x+1)/Gamma_q(x)."""
    x = _check_x(x)
    lnq = math.log(p.q)
    return math.expm1(x * lnq) / math.expm1(lnq)


def gamma_inversion_residual(
    p: QParam, x: float, trunc: Truncation | None = None
) -> ResidualCheck:
    """|ln Gamma_q(x) - (x-1)(x-2)/2 * ln q - ln Gamma_{1/q}(x)| for q > 1.

    Both sides come from their own product series, so the residual measures
    consistency of the two regime implementations.
    """
    if p.regime is not Regime.SUPER_UNIT:
        raise DomainError("the inversion residual takes q > 1")
    x = _check_x(x)
    lhs = ln_q_gamma(p, x, trunc)
    rhs = ln_q_gamma(p.inverted(), x, trunc)
    shift = 0.5 * (x - 1.0) * (x - 2.0) * math.log(p.q)
    residual = abs(lhs.value - shift - rhs.value)
    budget = lhs.err_bound + rhs.err_bound + _fp_allowance(lhs.value, rhs.value, shift)
    return ResidualCheck(residual, budget)


def digamma_inversion_residual(
    p: QParam, x: float, trunc: Truncation | None = None
) -> ResidualCheck:
    """|psi_q(x) - (2x-3)/2 * ln q - psi_{1/q}(x)| for q > 1, each side by
    its own series."""
    if p.regime is not Regime.SUPER_UNIT:
        raise DomainError("the inversion residual takes q > 1")
    x = _check_x(x)
    lhs = q_digamma(p, x, trunc)
    rhs = q_digamma(p.inverted(), x, trunc)
    shift = 0.5 * (2.0 * x - 3.0) * math.log(p.q)
    residual = abs(lhs.value - shift - rhs.value)
    budget = lhs.err_bound + rhs.err_bound + _fp_allowance(lhs.value, rhs.value, shift)
    return ResidualCheck(residual, budget)
