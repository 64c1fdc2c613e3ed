import math

import pytest

from casilamb._gk15 import G7_INDICES, G7_WEIGHTS, K15_NODES, K15_WEIGHTS
from casilamb.errors import ConvergenceError, DomainError
from casilamb.quad import QuadSpec, gk_panel, integrate_finite, integrate_semiinfinite
from casilamb.regseries import g_closed


class TestRuleConstants:
    def test_symmetry_and_normalization(self):
        assert K15_NODES == tuple(-x for x in reversed(K15_NODES))
        assert K15_WEIGHTS == tuple(reversed(K15_WEIGHTS))
        assert math.fsum(K15_WEIGHTS) == pytest.approx(2.0, abs=5e-16)
        assert math.fsum(G7_WEIGHTS) == pytest.approx(2.0, abs=5e-16)

    def test_kronrod_exact_through_degree_22(self):
        for k in range(0, 23):
            exact = 0.0 if k % 2 else 2.0 / (k + 1)
            val = math.fsum(w * x ** k for x, w in zip(K15_NODES, K15_WEIGHTS))
            assert val == pytest.approx(exact, abs=3e-15)
        # degree 24 must NOT be exact (guards against a degenerate rule)
        val24 = math.fsum(w * x ** 24 for x, w in zip(K15_NODES, K15_WEIGHTS))
        assert abs(val24 - 2.0 / 25.0) > 1e-10

    def test_gauss_subset_exact_through_degree_13(self):
        nodes = [K15_NODES[i] for i in G7_INDICES]
        for k in range(0, 14):
            exact = 0.0 if k % 2 else 2.0 / (k + 1)
            val = math.fsum(w * x ** k for x, w in zip(nodes, G7_WEIGHTS))
            assert val == pytest.approx(exact, abs=3e-15)
        val14 = math.fsum(w * x ** 14 for x, w in zip(nodes, G7_WEIGHTS))
        assert abs(val14 - 2.0 / 15.0) > 1e-6


class TestPanel:
    def test_polynomial_panel(self):
        val, err = gk_panel(lambda t: t ** 4, 0.0, 2.0)
        assert val == pytest.approx(32.0 / 5.0, rel=1e-15)
        assert err < 1e-13

    def test_error_estimate_reflects_roughness(self):
        _, err_smooth = gk_panel(math.cos, 0.0, 1.0)
        _, err_rough = gk_panel(lambda t: math.cos(40.0 * t), 0.0, 1.0)
        assert err_rough > err_smooth


class TestSemiInfinite:
    def test_gaussian_breakpoints(self):
        res = integrate_semiinfinite(lambda t: math.exp(-t * t), True)
        assert res.value == pytest.approx(math.sqrt(math.pi) / 2.0, abs=1e-12)

    def test_gaussian_smooth(self):
        res = integrate_semiinfinite(lambda t: math.exp(-t * t), False)
        assert res.value == pytest.approx(math.sqrt(math.pi) / 2.0, abs=1e-12)

    def test_lorentzian_smooth(self):
        res = integrate_semiinfinite(lambda t: 1.0 / (1.0 + t * t), False)
        assert res.value == pytest.approx(math.pi / 2.0, abs=1e-10)

    def test_lorentzian_breakpoints_exhausts_panels(self):
        # pointwise probe never falls below the threshold in reach: the
        # non-convergence error carries the partial value
        spec = QuadSpec(max_panels=200)
        with pytest.raises(ConvergenceError) as exc_info:
            integrate_semiinfinite(lambda t: 1.0 / (1.0 + t * t), True, spec)
        partial = exc_info.value.partial_value
        assert partial is not None and 0.0 < partial < math.pi / 2.0

    def test_breakpoints_match_smooth_mode_on_smooth_integrand(self):
        spec = QuadSpec()
        for f in (lambda t: math.exp(-t * t), lambda t: math.exp(-t) * math.cos(t)):
            a = integrate_semiinfinite(f, True, spec)
            b = integrate_semiinfinite(f, False, spec)
            tol = spec.relative_tolerance * abs(b.value) + spec.absolute_tolerance
            assert abs(a.value - b.value) <= 2.0 * tol

    def test_halving_tolerance_never_hurts(self):
        exact = {
            0: math.sqrt(math.pi) / 2.0,
            1: math.pi / 2.0,
        }
        cases = [
            (lambda t: math.exp(-t * t), False, 0),
            (lambda t: 1.0 / (1.0 + t * t), False, 1),
        ]
        for f, bp, key in cases:
            prev_err = None
            for rel in (1e-6, 5e-7, 2.5e-7, 1.25e-7):
                res = integrate_semiinfinite(
                    f, bp, QuadSpec(relative_tolerance=rel, absolute_tolerance=1e-14)
                )
                actual = abs(res.value - exact[key])
                if prev_err is not None:
                    assert actual <= prev_err + 1e-15
                prev_err = actual

    def test_sawtooth_weighted_integrand(self):
        # the defining use case: sawtooth times a wide envelope; reference
        # value cross-checked against the expansion route in test_casimir
        f = lambda s: g_closed(s) * math.exp(-((s / 100.0) ** 2))
        res = integrate_semiinfinite(f, True)
        assert res.value == pytest.approx(math.pi / 12.0, abs=1e-5)
        assert res.panels_used >= 600


class TestFinite:
    def test_basic(self):
        res = integrate_finite(lambda t: t * t, 0.0, 10.0)
        assert res.value == pytest.approx(1000.0 / 3.0, rel=1e-14)

    def test_breakpoint_splitting(self):
        res = integrate_finite(g_closed, 0.25, 2.0, breakpoints_at_integers=True)
        # full periods integrate to zero; what remains is
        # int_{1/4}^{1} pi (1/2 - s) ds = -3 pi / 32
        assert res.value == pytest.approx(-3.0 * math.pi / 32.0, abs=1e-12)

    def test_empty_and_bad_interval(self):
        assert integrate_finite(math.sin, 1.0, 1.0).value == 0.0
        with pytest.raises(DomainError):
            integrate_finite(math.sin, 2.0, 1.0)

    def test_spec_validation(self):
        with pytest.raises(DomainError):
            QuadSpec(max_panels=10)
        with pytest.raises(DomainError):
            QuadSpec(relative_tolerance=0.0)
