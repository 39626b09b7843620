"""Tour of the evaluators.

Evaluates the q-gamma family at a few points in both regimes, prints the
certified truncation bounds, and spot-checks the structural identities
(functional equation, parameter inversion) that tie the two regimes
together.
"""

import math

from qfun import (
    QParam,
    Truncation,
    digamma_inversion_residual,
    gamma_inversion_residual,
    ln_q_gamma,
    q_bracket,
    q_digamma,
    q_gamma,
    q_polygamma,
)


def main():
    print("== point evaluations ==")
    for q in (0.5, 2.0):
        p = QParam(q)
        for x in (0.5, 1.0, 2.5, 7.0):
            g = q_gamma(p, x)
            d = q_digamma(p, x)
            print(
                f"q={q}  x={x:4.1f}  Gamma={g.value:.12g} (+-{g.err_bound:.1e}, "
                f"{g.terms} terms)  psi={d.value:.12g} (+-{d.err_bound:.1e})"
            )

    print()
    print("== functional equation Gamma_q(x+1) = [x]_q Gamma_q(x) ==")
    for q in (0.3, 5.0):
        p = QParam(q)
        x = 2.2
        lhs = q_gamma(p, x + 1.0).value
        rhs = q_bracket(p, x) * q_gamma(p, x).value
        print(f"q={q}  lhs={lhs:.15g}  rhs={rhs:.15g}  diff={lhs - rhs:.1e}")

    print()
    print("== derivatives carry the sign pattern (-1)^(n+1) ==")
    p = QParam(0.5)
    for n in range(1, 5):
        v = q_polygamma(p, 1.5, n).value
        print(f"n={n}  psi^({n})(1.5) = {v:+.12g}")

    print()
    print("== regime inversion (q > 1 reduces to 1/q < 1) ==")
    for q in (2.0, 5.0):
        p = QParam(q)
        rg = gamma_inversion_residual(p, 3.3)
        rd = digamma_inversion_residual(p, 3.3)
        print(
            f"q={q}  gamma residual {rg.residual:.2e} (budget {rg.budget:.2e})  "
            f"psi residual {rd.residual:.2e} (budget {rd.budget:.2e})"
        )

    print()
    print("== tightening the truncation target ==")
    p = QParam(0.9)
    for rel in (1e-6, 1e-10, 1e-14):
        r = q_digamma(p, 0.5, Truncation(rel_tol=rel))
        print(f"rel_tol={rel:.0e}  value={r.value:.15g}  terms={r.terms}")

    print()
    print("== log-space survives where the direct value overflows ==")
    p = QParam(5.0)
    lg = ln_q_gamma(p, 200.0)
    print(f"ln Gamma_5(200) = {lg.value:.6e}  (exp would need ~{lg.value / math.log(10):.0f} digits)")


if __name__ == "__main__":
    main()
