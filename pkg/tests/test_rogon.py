"""Closed-form evaluator checks against independently computed values and the
structural identities of the solution family."""

import math

import numpy as np
import pytest

from rogonlab import (
    ParameterError,
    RogonParams,
    background_amplitudes,
    carrier_phase,
    eval_field,
    eval_grid,
    eval_rogon1,
    eval_rogon2,
    peak_info,
    poly_H2,
    poly_P2,
    poly_Q2,
    rogon1_factor,
    rogon2_factor,
)
from conftest import random_params


class TestBackgroundAmplitudes:
    def test_fig1_values(self, fig1_params):
        # hand computation: 1.5*2/sqrt(2*29) and 1.5*5/sqrt(2*29)
        a_sig, a_psi = background_amplitudes(fig1_params)
        assert a_sig == pytest.approx(3.0 / math.sqrt(58.0), rel=1e-15)
        assert a_psi == pytest.approx(7.5 / math.sqrt(58.0), rel=1e-15)

    def test_scalar_reduction_collapses_prefactor(self):
        p = RogonParams(alpha=math.sqrt(2.0), beta=1.0, a=1.0, b=0.0)
        a_sig, a_psi = background_amplitudes(p)
        assert a_sig == pytest.approx(1.0, rel=1e-15)
        assert a_psi == 0.0

    def test_equal_weights_symmetry(self):
        p = RogonParams(alpha=1.7, beta=2.3, a=0.8, b=0.8)
        a_sig, a_psi = background_amplitudes(p)
        assert a_sig == a_psi
        assert a_sig == pytest.approx(1.7 / (2.0 * math.sqrt(2.3)), rel=1e-14)

    def test_combined_intensity_identity(self, rng):
        for p in random_params(rng, 50):
            a_sig, a_psi = background_amplitudes(p)
            assert a_sig**2 + a_psi**2 == pytest.approx(
                p.alpha**2 / (2.0 * p.beta), rel=1e-13
            )
            assert math.copysign(1.0, a_sig) == math.copysign(1.0, p.a) or p.a == 0
            assert math.copysign(1.0, a_psi) == math.copysign(1.0, p.b) or p.b == 0


class TestCarrierPhase:
    def test_zero_exponent(self):
        p = RogonParams(alpha=1.0, beta=1.0, a=1.0, b=1.0, k=0.0)
        assert carrier_phase(p, 3.7, 0.0) == 1.0 + 0.0j

    def test_half_turn(self):
        # phase = alpha^2 * t / 2 = pi
        p = RogonParams(alpha=math.sqrt(2.0), beta=1.0, a=1.0, b=1.0, k=0.0)
        c = carrier_phase(p, 0.0, math.pi)
        assert c.real == pytest.approx(-1.0, abs=1e-15)
        assert c.imag == pytest.approx(0.0, abs=1e-15)

    def test_unit_modulus(self, rng):
        for p in random_params(rng, 20):
            S = rng.uniform(-20, 20, 64)
            t = rng.uniform(-20, 20, 64)
            assert np.allclose(np.abs(carrier_phase(p, S, t)), 1.0, atol=4e-16)


class TestRogon1Factor:
    def test_peak_value(self, rng):
        for p in random_params(rng, 10):
            assert rogon1_factor(p, 0.0, 0.0) == -3.0 + 0.0j

    def test_hand_value(self):
        p = RogonParams(alpha=1.0, beta=1.0, a=1.0, b=1.0, k=0.0)
        # denominator 1 + 2*1 = 3
        assert rogon1_factor(p, 1.0, 0.0) == pytest.approx(-1.0 / 3.0, rel=1e-15)

    def test_far_field_limit(self):
        p = RogonParams(alpha=1.0, beta=1.0, a=1.0, b=1.0, k=0.0)
        # imaginary part decays like 4/(alpha^2*t)
        assert abs(rogon1_factor(p, 0.0, 1e6) - 1.0) < 1e-5

    def test_denominator_positivity(self, rng):
        for p in random_params(rng, 20):
            S = rng.uniform(-50, 50, 256)
            t = rng.uniform(-50, 50, 256)
            xi = S - p.k * t
            den = 1.0 + 2.0 * p.alpha**2 * xi**2 + p.alpha**4 * t**2
            assert np.all(den >= 1.0)


class TestPolynomials:
    def test_origin_constants(self, fig1_params):
        assert poly_P2(fig1_params, 0.0, 0.0) == 3.0 / 8.0
        assert poly_Q2(fig1_params, 0.0, 0.0) == -15.0 / 4.0
        assert poly_H2(fig1_params, 0.0, 0.0) == 3.0 / 32.0

    def test_h2_positive_on_scan(self, rng):
        # randomized scan over the comoving variable, time, and alpha
        n = 10**6
        xi = rng.uniform(-50.0, 50.0, n)
        t = rng.uniform(-50.0, 50.0, n)
        alpha = rng.uniform(np.finfo(float).tiny, 5.0, n)
        u = (alpha * xi) ** 2
        w = (alpha**2 * t) ** 2
        h2 = (
            u**3 / 12.0 + 0.125 * u**2 * w + 0.0625 * u * w**2 + w**3 / 96.0
            + 0.125 * u**2 - 0.375 * u * w + 0.28125 * w**2
            + 0.5625 * u + 1.03125 * w + 0.09375
        )
        assert h2.min() > 0.0


class TestRogon2Factor:
    def test_origin_value(self, fig1_params):
        # 1 + (3/8)/(3/32) = 5, exactly representable
        assert rogon2_factor(fig1_params, 0.0, 0.0) == 5.0 + 0.0j

    def test_far_field_limit(self, fig1_params):
        assert abs(rogon2_factor(fig1_params, 1e5, 0.0) - 1.0) < 1e-8

    def test_imag_odd_in_t(self, fig1_params, rng):
        S = rng.uniform(-5, 5, 100)
        t = rng.uniform(-5, 5, 100)
        f_pos = rogon2_factor(fig1_params, S, t)
        f_neg = rogon2_factor(fig1_params, S, -t)
        assert np.allclose(f_pos.imag, -f_neg.imag, atol=1e-13)
        assert np.allclose(f_pos.real, f_neg.real, atol=1e-13)


class TestEvalField:
    def test_peak_intensity_order1(self, fig1_params):
        sigma, _ = eval_rogon1(fig1_params, 0.0, 0.0)
        assert abs(sigma) ** 2 == pytest.approx(81.0 / 58.0, rel=1e-14)

    def test_peak_intensity_order2(self, fig1_params):
        _, psi = eval_rogon2(fig1_params, 0.0, 0.0)
        assert abs(psi) ** 2 == pytest.approx(1406.25 / 58.0, rel=1e-14)

    def test_proportionality_within_ulps(self, rng):
        for p in random_params(rng, 10):
            S = rng.uniform(-10, 10, 50)
            t = rng.uniform(-10, 10, 50)
            for order in (1, 2):
                sigma, psi = eval_field(p, order, S, t)
                lhs = p.a * psi
                rhs = p.b * sigma
                scale = np.maximum(np.abs(lhs), np.abs(rhs))
                assert np.all(np.abs(lhs - rhs) <= 4.0 * np.spacing(scale))

    def test_scalar_reduction(self):
        p = RogonParams(alpha=1.2, beta=0.7, a=0.0, b=2.0, k=0.3)
        sigma, psi = eval_rogon1(p, 0.4, 0.6)
        assert sigma == 0.0
        assert abs(psi) > 0

    def test_parity_at_zero_gauge(self, rng):
        for p in random_params(rng, 5, k_zero=True):
            S = rng.uniform(-8, 8, 64)
            t = rng.uniform(-8, 8, 64)
            for order in (1, 2):
                s0, _ = eval_field(p, order, S, t)
                s1, _ = eval_field(p, order, -S, t)
                s2, _ = eval_field(p, order, S, -t)
                assert np.allclose(np.abs(s0), np.abs(s1), rtol=1e-13)
                assert np.allclose(np.abs(s0), np.abs(s2), rtol=1e-13)

    def test_comoving_reduction(self, rng):
        for p in random_params(rng, 5):
            S = rng.uniform(-8, 8, 64)
            t = rng.uniform(-8, 8, 64)
            p0 = p.with_k(0.0)
            for order in (1, 2):
                sk, _ = eval_field(p, order, S, t)
                s0, _ = eval_field(p0, order, S - p.k * t, t)
                assert np.allclose(np.abs(sk), np.abs(s0), rtol=1e-12)

    def test_scale_structure(self, rng):
        # the rational factor depends on alpha only through alpha*xi, alpha^2*t
        x = 1.3
        tau = -0.7
        ref = None
        for alpha in (0.5, 1.0, 2.0, 3.5):
            p = RogonParams(alpha=alpha, beta=1.0, a=1.0, b=1.0, k=0.0)
            val = rogon2_factor(p, x / alpha, tau / alpha**2)
            if ref is None:
                ref = val
            assert val == pytest.approx(ref, rel=1e-12)

    def test_translation_invariance(self, fig1_params):
        # evaluating at t - t0 equals evaluating on a time-shifted grid,
        # and the shifted field still solves the system
        t0 = 0.8
        S = np.linspace(-3, 3, 41)
        t = np.linspace(-1, 1, 21)
        direct_s, direct_p = eval_field(fig1_params, 2, S[None, :], (t - t0)[:, None])
        shifted = eval_grid(fig1_params, 2, (-3, 3), (-1 - t0, 1 - t0), 41, 21)
        assert np.allclose(direct_s, shifted.sigma, rtol=1e-13)
        assert np.allclose(direct_p, shifted.psi, rtol=1e-13)


class TestEvalGrid:
    def test_single_point_matches_pointwise(self, fig1_params):
        g = eval_grid(fig1_params, 1, (0.0, 0.0), (0.0, 0.0), 1, 1)
        sigma, psi = eval_rogon1(fig1_params, 0.0, 0.0)
        assert np.allclose(g.sigma[0, 0], sigma, rtol=1e-14)
        assert np.allclose(g.psi[0, 0], psi, rtol=1e-14)

    def test_fig3_argmax_at_origin(self, fig1_params):
        g = eval_grid(fig1_params, 2, (-4, 4), (-2, 2), 401, 201)
        it, js = np.unravel_index(np.argmax(g.i_sigma), g.i_sigma.shape)
        assert g.S[js] == 0.0 and g.t[it] == 0.0

    def test_matches_broadcast_evaluators(self, fig1_params):
        g = eval_grid(fig1_params, 2, (-4, 4), (-2, 2), 81, 41)
        sigma, psi = eval_field(fig1_params, 2, g.S[None, :], g.t[:, None])
        assert np.allclose(g.sigma, sigma, rtol=1e-13, atol=1e-15)
        assert np.allclose(g.psi, psi, rtol=1e-13, atol=1e-15)

    def test_rejects_bad_sizes(self, fig1_params):
        with pytest.raises(ParameterError):
            eval_grid(fig1_params, 1, (-1, 1), (-1, 1), 0, 5)


class TestPeakInfo:
    def test_ratios(self, fig1_params):
        assert peak_info(fig1_params, 1).amplitude_ratio == 3.0
        assert peak_info(fig1_params, 2).amplitude_ratio == 5.0
        assert peak_info(fig1_params, 1).intensity_ratio == 9.0
        assert peak_info(fig1_params, 2).intensity_ratio == 25.0
        assert peak_info(fig1_params, 2).location == (0.0, 0.0)

    def test_grid_search_oracle(self, fig1_params):
        # dense argmax agrees with the hard-coded analytic peak
        for order, ratio in ((1, 9.0), (2, 25.0)):
            g = eval_grid(fig1_params, order, (-3, 3), (-1.5, 1.5), 601, 301)
            it, js = np.unravel_index(np.argmax(g.i_sigma), g.i_sigma.shape)
            assert (g.S[js], g.t[it]) == peak_info(fig1_params, order).location
            a_sig, _ = background_amplitudes(fig1_params)
            assert g.i_sigma[it, js] == pytest.approx(ratio * a_sig**2, rel=1e-13)
