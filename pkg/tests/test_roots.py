"""Zero location and the derived constants.

x0 references were computed with mpmath (40 dps) by bisecting the same
series to 1e-21; constants against their defining sums.
"""

import math

import pytest

from qfun import (
    DomainError,
    QParam,
    Truncation,
    digamma_zero,
    q_digamma,
    q_euler_mascheroni,
    q_harmonic,
)

# mpmath, 40 dps
X0_FROZEN = {
    0.2: 1.4219658034220688,
    0.5: 1.4463627156098169,
    0.8: 1.4570478055569942,
    2.0: 1.4738231706986189,
    5.0: 1.4854004708358908,
}


class TestDigammaZero:
    def test_frozen_locations(self):
        for q, want in X0_FROZEN.items():
            z = digamma_zero(QParam(q))
            assert z.x0 == pytest.approx(want, abs=1e-10), q

    def test_residual_within_tol(self):
        for q in X0_FROZEN:
            z = digamma_zero(QParam(q), tol=1e-12)
            assert abs(z.residual) <= 1e-12

    def test_bracket_in_unit_shifted_interval(self):
        # the zero lives in (1, 2) for every admissible q
        for q in (0.05, 0.3, 0.6, 0.95, 3.0, 10.0):
            z = digamma_zero(QParam(q))
            assert 1.0 < z.x0 < 2.0
            lo, hi = z.bracket
            assert lo <= z.x0 <= hi

    def test_sign_change_across_zero(self):
        for q in (0.3, 2.0):
            p = QParam(q)
            z = digamma_zero(p)
            assert q_digamma(p, z.x0 - 0.05).value < 0.0
            assert q_digamma(p, z.x0 + 0.05).value > 0.0

    def test_classical_limit(self):
        # q -> 1 recovers the positive zero of the ordinary digamma
        z = digamma_zero(QParam(0.999))
        assert abs(z.x0 - 1.4616) <= 5e-3
        assert z.x0 == pytest.approx(1.4616123069919615, abs=1e-9)

    def test_iterations_reported(self):
        z = digamma_zero(QParam(0.5))
        assert z.iterations > 0


class TestQEulerMascheroni:
    def test_frozen_value(self):
        # mpmath: (1-q)/ln(q) * psi_q(1)
        got = q_euler_mascheroni(QParam(0.5))
        assert got == pytest.approx(0.3033475762076459, rel=1e-13)

    def test_classical_limit(self):
        got = q_euler_mascheroni(QParam(0.9999, allow_near_one=True))
        assert got == pytest.approx(0.577161803984, abs=1e-9)
        # still a visible distance from Euler's constant at this q
        assert abs(got - 0.5772156649015329) > 1e-5

    def test_definition_consistency(self):
        for q in (0.2, 0.7):
            p = QParam(q)
            want = (1.0 - q) / math.log(q) * q_digamma(p, 1.0).value
            assert q_euler_mascheroni(p) == pytest.approx(want, rel=1e-14)

    def test_super_unit_rejected(self):
        with pytest.raises(DomainError):
            q_euler_mascheroni(QParam(2.0))


class TestQHarmonic:
    def test_frozen_values(self):
        p = QParam(0.5)
        assert q_harmonic(p, 1) == pytest.approx(1.0, rel=1e-15)
        assert q_harmonic(p, 2) == pytest.approx(4.0 / 3.0, rel=1e-15)
        assert q_harmonic(p, 10) == pytest.approx(1.6057182718907462, rel=1e-13)

    def test_matches_direct_sum(self):
        for q in (0.2, 0.8):
            p = QParam(q)
            for n in (1, 3, 12):
                want = sum(q**k / (1.0 - q**k) for k in range(1, n + 1))
                assert q_harmonic(p, n) == pytest.approx(want, rel=1e-13)

    def test_zero_terms(self):
        assert q_harmonic(QParam(0.5), 0) == 0.0

    def test_validation(self):
        with pytest.raises(DomainError):
            q_harmonic(QParam(0.5), -1)
        with pytest.raises(DomainError):
            q_harmonic(QParam(2.0), 3)


class TestRaisedCaps:
    def test_near_one_with_explicit_truncation(self):
        t = Truncation(rel_tol=1e-12, max_terms=10_000_000)
        z = digamma_zero(QParam(0.999), tol=1e-10, trunc=t)
        assert abs(z.x0 - 1.4616) <= 5e-3
