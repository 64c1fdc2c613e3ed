import math
import warnings

import numpy as np
import pytest

from casilamb.errors import DomainError, RegimeError
from casilamb.lamb import (
    MATERIALS,
    VALIDITY_BOUND,
    LambContext,
    Material,
    QDotSystem,
    bethe_relative_shift,
    leading_relative_shift,
    qd_cutoffs,
    qd_relative_shift,
    sweep_distance,
    sweep_radius,
    welton_relative_shift,
)

INAS = MATERIALS["InAs"]


def ctx(eta, log_ratio=1.0):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return LambContext(kappa_d=1.0, kappa_star=eta, m_star=eta * math.exp(log_ratio))


class TestLambContext:
    def test_weak_coupling_gate(self):
        with pytest.raises(RegimeError):
            LambContext(1.0, 0.5, 100.0)
        with pytest.raises(RegimeError):
            LambContext(1.0, 1.0, 100.0)

    def test_uv_gate(self):
        with pytest.raises(RegimeError):
            LambContext(1.0, 10.0, 5.0)

    def test_marginal_log_warns(self):
        with pytest.warns(UserWarning):
            LambContext(1.0, 10.0, 50.0)

    def test_derived(self):
        c = ctx(10.0, 2.0)
        assert c.eta_star == 10.0
        assert c.log_factor == pytest.approx(2.0, rel=1e-14)


class TestSeriesShifts:
    def test_first_term_hand_value(self):
        c = ctx(10.0, 1.0)
        assert bethe_relative_shift(c, 1).value == pytest.approx(1.0 / 1200.0, rel=1e-14)
        assert welton_relative_shift(c, 1).value == pytest.approx(1.0 / 1200.0, rel=1e-14)

    def test_first_order_universality(self):
        rng = np.random.RandomState(31)
        for _ in range(100):
            c = ctx(float(rng.uniform(1.5, 200.0)), float(rng.uniform(0.5, 8.0)))
            lead = leading_relative_shift(c)
            b1 = bethe_relative_shift(c, 1).value
            w1 = welton_relative_shift(c, 1).value
            assert abs(b1 - lead) <= 1e-15 * lead
            assert abs(w1 - lead) <= 1e-15 * lead

    @pytest.mark.parametrize("eta", [2.0, 3.0, 5.0, 10.0])
    def test_ordering_at_optimal_truncation(self, eta):
        c = ctx(eta, 3.0)
        b = bethe_relative_shift(c, 59)
        w = welton_relative_shift(c, 59)
        assert b.series.truncation_index >= 2
        assert b.value < w.value

    def test_welton_two_term_hand_value(self):
        c = ctx(3.0, 1.0)
        w = welton_relative_shift(c, 2)
        expected = (1.0 / 12.0) / 9.0 + (1.0 / 360.0) / 81.0
        assert w.value == pytest.approx(expected, rel=1e-13)
        assert bethe_relative_shift(c, 2).value < w.value

    def test_infinite_separation_limit(self):
        c = ctx(1e6, 1.0)
        assert bethe_relative_shift(c, 1).value < 1e-13
        assert welton_relative_shift(c, 1).value < 1e-13

    def test_positivity(self):
        rng = np.random.RandomState(32)
        for _ in range(1000):
            c = ctx(float(rng.uniform(1.01, 1e4)), float(rng.uniform(0.1, 10.0)))
            assert leading_relative_shift(c) >= 0.0

    def test_r_validation(self):
        with pytest.raises(DomainError):
            bethe_relative_shift(ctx(5.0), 0)

    def test_series_matches_plate_functional_quadrature(self):
        # the shift series times the log factor equals pi^2/V times the
        # plate functional of the matching IR-regularized weight, computed
        # by the wholly independent panel-quadrature route
        import warnings as _w

        from casilamb.casimir import (
            CutoffProfile,
            PlateGeometry,
            SpectralWeight,
            h_casimir_quadrature,
        )

        with _w.catch_warnings():
            _w.simplefilter("ignore")
            geom = PlateGeometry(1.0, 1.0)
        eta = 10.0
        c = ctx(eta, 2.0)
        shift = bethe_relative_shift(c, 2)
        w = SpectralWeight(1.0, 1.0, -1, eta, eta)
        prof = CutoffProfile("gaussian", 1e5 * geom.kappa_d)
        h = h_casimir_quadrature(w, geom, prof)
        quad_shift = math.pi ** 2 * h / geom.volume / c.log_factor
        assert abs(shift.value - quad_shift) <= shift.remainder_bound


class TestQdCutoffs:
    def test_inas_electron_scales(self):
        cuts = qd_cutoffs(INAS, "electron", 1.5)
        assert cuts.lambda_star == pytest.approx(1.4852e-2, rel=1e-4)
        assert cuts.r_star == pytest.approx(3.5637e-2, rel=1e-4)
        # m*/kappa* must equal (R/R*)^2 to rounding
        m_star = 1.0 / cuts.lambda_star
        assert m_star / cuts.kappa_star == pytest.approx(
            (1.5 / cuts.r_star) ** 2, rel=1e-12
        )

    def test_radius_scaling(self):
        c1 = qd_cutoffs(INAS, "electron", 1.0)
        c2 = qd_cutoffs(INAS, "electron", 2.0)
        assert c2.kappa_star == pytest.approx(c1.kappa_star / 4.0, rel=1e-14)

    def test_exciton_sum_rule(self):
        ce = qd_cutoffs(INAS, "electron", 2.0)
        ch = qd_cutoffs(INAS, "hole", 2.0)
        cx = qd_cutoffs(INAS, "exciton", 2.0)
        assert cx.kappa_star == pytest.approx(ce.kappa_star + ch.kappa_star, rel=1e-13)

    def test_material_validation(self):
        with pytest.raises(DomainError):
            Material("bogus", 0.0, 0.4)
        with pytest.raises(DomainError):
            qd_cutoffs(INAS, "muon", 1.0)
        with pytest.raises(DomainError):
            qd_cutoffs(INAS, "electron", 0.0)


class TestQdShift:
    def test_reference_point(self):
        sysd = QDotSystem(INAS, 1.5, 100.0)
        value = qd_relative_shift(sysd, "direct")
        assert value == pytest.approx(7.6e-3, abs=2e-4)

    def test_route_agreement(self):
        rng = np.random.RandomState(33)
        count = 0
        while count < 100:
            radius = float(rng.uniform(0.2, 3.0))
            sep = float(rng.uniform(50.0, 2000.0))
            carrier = str(rng.choice(["electron", "hole", "exciton"]))
            sysd = QDotSystem(INAS, radius, sep, carrier)
            if not sysd.is_valid:
                continue
            count += 1
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                direct = qd_relative_shift(sysd, "direct")
                via = qd_relative_shift(sysd, "via_cutoffs")
            assert abs(direct - via) <= 1e-12 * direct

    def test_validity_boundary_rejected(self):
        cuts = qd_cutoffs(INAS, "electron", 1.5)
        d_boundary = 1.5 ** 2 / (cuts.r_star * VALIDITY_BOUND)
        sysd = QDotSystem(INAS, 1.5, d_boundary * 0.999)
        assert not sysd.is_valid
        with pytest.raises(RegimeError):
            qd_relative_shift(sysd)

    def test_confinement_bound_rejected(self):
        cuts = qd_cutoffs(INAS, "electron", 1.0)
        sysd = QDotSystem(INAS, 0.5 * cuts.r_star, 100.0)
        with pytest.raises(RegimeError):
            qd_relative_shift(sysd)

    def test_unknown_route(self):
        with pytest.raises(DomainError):
            qd_relative_shift(QDotSystem(INAS, 1.5, 100.0), "eqn")


class TestSweeps:
    def test_radius_sweep_monotone_and_valid(self):
        grid = [0.2 + 0.1 * k for k in range(13)]
        rows = sweep_radius(INAS, "electron", 100.0, grid)
        assert len(rows) == len(grid)
        valid_rows = [r for r in rows if r.valid]
        assert valid_rows, "expected a valid window"
        shifts = [r.shift_leading for r in valid_rows]
        assert all(b > a for a, b in zip(shifts, shifts[1:]))

    def test_radius_sweep_flags_invalid(self):
        rows = sweep_radius(INAS, "electron", 100.0, [0.5, 5.0])
        assert rows[0].valid and not rows[1].valid
        assert math.isnan(rows[1].shift_leading)

    def test_distance_sweep_inverse_square(self):
        grid = [90.0 + 10.0 * k for k in range(92)]
        rows = sweep_distance(INAS, "electron", 1.5, grid)
        assert all(r.valid for r in rows)
        scaled = [r.shift_leading * r.separation_nm ** 2 for r in rows]
        for v in scaled[1:]:
            assert v == pytest.approx(scaled[0], rel=1e-10)

    def test_distance_sweep_flags_below_minimum(self):
        rows = sweep_distance(INAS, "electron", 1.5, [50.0, 100.0])
        assert not rows[0].valid and rows[1].valid

    def test_far_distance_limit(self):
        rows = sweep_distance(INAS, "electron", 1.5, [1e6, 1e7])
        assert all(r.valid for r in rows)
        assert rows[0].shift_leading < 1e-10
        assert rows[1].shift_leading < 1e-12

    def test_unsorted_grid_rejected(self):
        with pytest.raises(DomainError):
            sweep_radius(INAS, "electron", 100.0, [1.0, 0.5])

    def test_d_ratio_scaling_between_sweeps(self):
        r100 = sweep_radius(INAS, "electron", 100.0, [1.0])[0]
        r1000 = sweep_radius(INAS, "electron", 1000.0, [1.0])[0]
        assert r100.shift_leading / r1000.shift_leading == pytest.approx(100.0, rel=1e-10)
