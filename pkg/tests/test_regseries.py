import math

import numpy as np
import pytest

from casilamb.errors import DomainError
from casilamb.regseries import (
    RegularizationParams,
    comb_term,
    euler_maclaurin_identity_check,
    g_closed,
    g_regularized,
    remainder_R1,
)

# uniform bound from the comb-term geometric majorant
C_UNIFORM = 2.0 * math.pi / (1.0 - math.exp(-math.pi ** 2))


class TestParams:
    def test_validation(self):
        with pytest.raises(DomainError):
            RegularizationParams(epsilon=-1.0, max_terms=100)
        with pytest.raises(DomainError):
            RegularizationParams(epsilon=1e-3, max_terms=100, tail_tolerance=-1.0)
        with pytest.raises(DomainError):
            # termwise bound at max_terms must clear the tolerance
            RegularizationParams(epsilon=1e-6, max_terms=10)

    def test_for_epsilon_is_minimal_enough(self):
        for eps in (1e-1, 1e-2, 1e-3, 1e-4):
            p = RegularizationParams.for_epsilon(eps)
            bound = math.exp(-eps * p.max_terms ** 2) / p.max_terms
            assert bound < p.tail_tolerance


class TestClosedForm:
    def test_examples(self):
        assert g_closed(0.25) == pytest.approx(math.pi / 4, abs=1e-15)
        assert g_closed(3.0) == 0.0
        assert g_closed(-0.25) == pytest.approx(-math.pi / 4, abs=1e-15)

    def test_odd_periodic_bounded_zero_at_integers(self):
        rng = np.random.RandomState(11)
        for s in rng.uniform(-50, 50, size=10_000):
            s = float(s)
            v = g_closed(s)
            assert abs(v) <= math.pi / 2 + 1e-15
            assert g_closed(-s) == -v
            assert g_closed(s + 1.0) == pytest.approx(v, abs=1e-9)
        for k in range(-5, 6):
            assert g_closed(float(k)) == 0.0


class TestRegularizedSeries:
    def test_converges_to_closed_form(self):
        p = RegularizationParams.for_epsilon(0.01)
        assert g_regularized(0.25, p) == pytest.approx(math.pi / 4, abs=1e-8)

    def test_vanishes_at_zero_and_half(self):
        for eps in (1.0, 0.1, 0.01):
            p = RegularizationParams.for_epsilon(eps)
            assert g_regularized(0.0, p) == 0.0
            assert abs(g_regularized(0.5, p)) < 1e-12

    def test_pointwise_convergence_monotone_in_eps(self):
        for s in (0.1, 0.25, 0.4):
            errs = []
            for k in range(1, 5):
                p = RegularizationParams.for_epsilon(10.0 ** (-k))
                errs.append(abs(g_regularized(s, p) - g_closed(s)))
            # monotone until the series-truncation floor takes over
            assert all(e2 <= e1 + 1e-12 for e1, e2 in zip(errs, errs[1:]))

    def test_uniform_bound(self):
        rng = np.random.RandomState(12)
        for _ in range(400):
            s = float(rng.uniform(-3, 3))
            eps = 10.0 ** float(rng.uniform(-4, 0))
            p = RegularizationParams.for_epsilon(eps)
            assert abs(g_regularized(s, p)) <= C_UNIFORM


class TestCombTerm:
    def test_zero_at_s_zero(self):
        assert comb_term(1, 0.0, 0.5) == 0.0

    def test_small_eps_interior(self):
        # for s in (0, 1/2) every term dies superexponentially as eps -> 0+
        assert abs(comb_term(1, 0.25, 1e-3)) < 1e-12

    def test_bound_on_unit_interval(self):
        rng = np.random.RandomState(13)
        for _ in range(500):
            n = int(rng.randint(1, 6))
            s = float(rng.uniform(0, 0.5))
            eps = 10.0 ** float(rng.uniform(-3, 0))
            h = comb_term(n, s, eps)
            assert 0.0 <= h <= math.pi * math.exp(-math.pi ** 2 / eps * (n - 1)) + 1e-300

    def test_general_s_limit(self):
        # n < |s| gives pi, n > |s| gives 0, with sign following s
        assert comb_term(2, 2.5, 1e-4) == pytest.approx(math.pi, abs=1e-10)
        assert comb_term(3, 2.5, 1e-4) == pytest.approx(0.0, abs=1e-10)
        assert comb_term(2, -2.5, 1e-4) == pytest.approx(-math.pi, abs=1e-10)

    def test_domain(self):
        with pytest.raises(DomainError):
            comb_term(0, 0.2, 0.1)
        with pytest.raises(DomainError):
            comb_term(1, 0.2, 0.0)


class TestRemainder:
    def test_interior_limit_zero(self):
        assert abs(remainder_R1(0.25, 1e-3)) < 1e-12

    def test_integer_counting_limits(self):
        assert remainder_R1(2.5, 1e-4) == pytest.approx(2 * math.pi, abs=1e-9)
        assert remainder_R1(1.0, 1e-4) == pytest.approx(math.pi / 2, abs=1e-9)
        assert remainder_R1(3.0, 1e-4) == pytest.approx(2.5 * math.pi, abs=1e-9)
        assert remainder_R1(-2.5, 1e-4) == pytest.approx(-2 * math.pi, abs=1e-9)


class TestIdentity:
    def test_examples(self):
        assert abs(euler_maclaurin_identity_check(0.25, 0.01)) < 1e-9
        assert abs(euler_maclaurin_identity_check(0.5, 0.1)) < 1e-9
        assert euler_maclaurin_identity_check(0.0, 0.37) == 0.0

    def test_grid(self):
        # 100-point (s, eps) grid on [0, 1/2] x [1e-4, 1]
        for i in range(10):
            s = 0.05 * (i + 0.5)
            for j in range(10):
                eps = 10.0 ** (-4.0 + 4.0 * j / 9.0)
                assert abs(euler_maclaurin_identity_check(s, eps)) < 1e-9

    def test_holds_beyond_half(self):
        # the identity extends to general s (comb terms carry the counting part)
        for s in (0.9, 1.0, 2.5, -1.7):
            assert abs(euler_maclaurin_identity_check(s, 1e-3)) < 1e-9
