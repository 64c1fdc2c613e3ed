"""Backend parity: the compiled kernels must reproduce the numpy reference
within tight float tolerances (summation order differs, so not bitwise)."""

import math

import numpy as np
import pytest

from casilamb import kernels
from casilamb.kernels import pyref

HAVE_COMPILED = kernels.BACKEND == "compiled"

WEIGHT_CASES = [
    # (amp, beta, xi, gamma, eta, cnorm, profile_id, n0, n1)
    (0.5, 0.0, 0.0, 2.0, 0.0, 1e-3, pyref.PROFILE_GAUSSIAN, 0, 2000),
    (1.0, 0.0, 10.0, -2.0, 10.0, 1e-4, pyref.PROFILE_GAUSSIAN, 0, 3000),
    (1.0, 1.0, 5.0, -1.0, 5.0, 1e-3, pyref.PROFILE_QUARTIC, 0, 1500),
    (2.0, 0.5, 3.0, 1.0, 2.0, 1e-2, pyref.PROFILE_SECH, 0, 800),
    (1.0, 0.0, 0.0, 0.0, 0.0, 1e-2, pyref.PROFILE_GAUSSIAN, 0, 400),
]


class TestSawtooth:
    def test_scalar_values(self):
        assert kernels.sawtooth(0.25) == pytest.approx(math.pi / 4)
        assert kernels.sawtooth(3.0) == 0.0
        assert kernels.sawtooth(-0.25) == pytest.approx(-math.pi / 4)

    def test_array_matches_scalar(self):
        s = np.linspace(-3, 3, 1001)
        arr = kernels.sawtooth_arr(s)
        for si, ai in zip(s, arr):
            assert ai == kernels.sawtooth(float(si))


class TestProfiles:
    def test_values_against_formulas(self):
        x = np.linspace(0.0, 5.0, 101)
        np.testing.assert_allclose(
            kernels.profile_value(x, kernels.PROFILE_GAUSSIAN), np.exp(-x * x), rtol=1e-15
        )
        np.testing.assert_allclose(
            kernels.profile_value(x, kernels.PROFILE_QUARTIC), np.exp(-x ** 4), rtol=1e-12
        )
        np.testing.assert_allclose(
            kernels.profile_value(x, kernels.PROFILE_SECH), 1.0 / np.cosh(x), rtol=1e-12
        )
        assert kernels.profile_value(0.7, kernels.PROFILE_NONE) == 1.0

    def test_unknown_profile(self):
        with pytest.raises(ValueError):
            kernels.profile_value(1.0, 99)


class TestSeries:
    def test_matches_direct_sum(self):
        s, eps = 0.3, 1e-2
        direct = math.fsum(
            math.sin(2 * math.pi * p * s) * math.exp(-eps * p * p) / p
            for p in range(1, 3000)
        )
        assert kernels.damped_sine_series(s, eps, 1e-14, 10**6) == pytest.approx(
            direct, abs=1e-13
        )

    def test_eps_validation(self):
        with pytest.raises(ValueError):
            kernels.damped_sine_series(0.3, 0.0, 1e-12, 1000)


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled backend not built")
class TestBackendParity:
    def test_sawtooth_parity(self):
        from casilamb.kernels import _fastkern

        s = np.linspace(-5, 5, 2001)
        np.testing.assert_array_equal(_fastkern.sawtooth_arr(s), pyref.sawtooth_arr(s))

    def test_series_parity(self):
        from casilamb.kernels import _fastkern

        for s in (0.1, 0.25, 0.77, -1.3):
            for eps in (1e-1, 1e-3):
                a = _fastkern.damped_sine_series(s, eps, 1e-13, 10**6)
                b = pyref.damped_sine_series(s, eps, 1e-13, 10**6)
                assert a == pytest.approx(b, abs=1e-13)

    @pytest.mark.parametrize("case", WEIGHT_CASES)
    def test_panel_sum_parity(self, case):
        from casilamb.kernels import _fastkern

        amp, beta, xi, gamma, eta, cnorm, pid, n0, n1 = case
        vc, ec = _fastkern.spectral_panel_sum(n0, n1, amp, beta, xi, gamma, eta, cnorm, pid, 1e-12)
        vp, ep = pyref.spectral_panel_sum(n0, n1, amp, beta, xi, gamma, eta, cnorm, pid, 1e-12)
        scale = max(abs(vc), abs(vp), 1e-30)
        assert abs(vc - vp) / scale < 1e-11
        assert ec >= 0.0 and ep >= 0.0


class TestPanelSumCorrectness:
    @pytest.mark.parametrize("case", WEIGHT_CASES[:3])
    def test_against_plain_quadrature(self, case):
        # independent route: scalar GK panels on the raw product integrand
        from casilamb.quad import gk_panel

        amp, beta, xi, gamma, eta, cnorm, pid, _, _ = case

        def raw(s):
            s_eta = math.sqrt(s * s + eta * eta)
            w = amp * s_eta ** gamma
            if beta:
                w /= (s + xi) ** beta
            w *= float(kernels.profile_value(cnorm * s_eta, pid))
            u = s - math.floor(s)
            return math.pi * (0.5 - u) * w

        n0, n1 = 3, 40
        direct = 0.0
        for n in range(n0, n1):
            for a, b in ((n, n + 0.5), (n + 0.5, n + 1.0)):
                direct += gk_panel(raw, a, b)[0]
        v, _ = kernels.spectral_panel_sum(
            n0, n1, amp, beta, xi, gamma, eta, cnorm, pid, 1e-12
        )
        assert v == pytest.approx(direct, rel=1e-9, abs=1e-12)
