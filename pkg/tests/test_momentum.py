"""Momentum-space solutions: characteristics, oscillator form, exact radial
and angular factors, and the Laguerre-case catalogs."""

import math

import numpy as np
import pytest

from hodoflow import verify
from hodoflow.errors import NodeError, ParameterError, RegionError, SaturationWarning
from hodoflow.mapping import SectorDomain
from hodoflow.maxwell import ModelParams, RegionTag, classify, coeff_g, discriminant
from hodoflow.momentum import (
    AngularFactor,
    CharacteristicKind,
    LaguerreCase,
    RadialSolution,
    brute_force_orders,
    canonical_kappa,
    characteristic_chi,
    factorized_u,
    frobenius_roots,
    hill_coefficient_G,
    hill_substitution_zeta,
    hyperbolic_omega,
    kummer_ab,
    laguerre_enumerate,
    laguerre_enumerate_for_ell,
    mu_plus,
    nu_roots,
    omega_matched_c1,
    omega_slope,
    radial_kummer,
    radial_value_slope,
    slope_rho_theta,
    zeta_bar,
)
from hodoflow.specfun import kummer_m, laguerre
from hodoflow.verify import fd_derivative


@pytest.fixture
def m22():
    return ModelParams(n=2, ell=2)


ALL_KINDS = list(CharacteristicKind)


class TestCharacteristics:
    def test_sonic_circle_value(self, m22):
        # both radial terms vanish at rho_T, leaving +/- theta
        for kind in ALL_KINDS:
            for theta in (0.0, 0.7, -1.2):
                assert characteristic_chi(m22, kind, m22.rho_t, theta) == pytest.approx(
                    kind.sign * theta, abs=1e-12
                )

    def test_level_set_slope_oracle(self, m22):
        # along chi = const: d(theta)/d(rho) = -sign * sqrt(Delta)/rho, i.e.
        # the radial part differentiates to sqrt(|Delta|)/rho
        rho = 1.5 * m22.rho_t
        fd = fd_derivative(
            lambda r: characteristic_chi(m22, CharacteristicKind.HYPERBOLIC_PLUS, r, 0.0), rho, h=1e-6
        )
        assert fd == pytest.approx(math.sqrt(discriminant(m22, rho)) / rho, rel=1e-6)
        rho_e = 0.6 * m22.rho_t
        fd_e = fd_derivative(
            lambda r: characteristic_chi(m22, CharacteristicKind.ELLIPTIC_MINUS, r, 0.0), rho_e, h=1e-6
        )
        assert fd_e == pytest.approx(math.sqrt(-discriminant(m22, rho_e)) / rho_e, rel=1e-6)

    def test_orthogonal_crossing(self, m22):
        assert slope_rho_theta(m22, m22.rho_t) == math.inf

    def test_region_errors(self, m22):
        with pytest.raises(RegionError):
            characteristic_chi(m22, CharacteristicKind.HYPERBOLIC_PLUS, 0.5 * m22.rho_t, 0.0)
        with pytest.raises(RegionError):
            characteristic_chi(m22, CharacteristicKind.ELLIPTIC_PLUS, 2.0 * m22.rho_t, 0.0)

    def test_saturation_near_origin(self, m22):
        with pytest.warns(SaturationWarning):
            val = characteristic_chi(m22, CharacteristicKind.ELLIPTIC_PLUS, 1e-9 * m22.rho_t, 0.0)
        assert math.isfinite(val)


class TestSlope:
    def test_n2_limit(self):
        p = ModelParams(n=2, ell=2)
        limit = p.rho_t / math.sqrt(p.ell + 1.0)
        assert slope_rho_theta(p, 100.0 * p.rho_t) == pytest.approx(limit, rel=0.01)

    def test_n1_interior_minimum_location(self):
        # The slope rho / sqrt(Delta) has its hyperbolic-side minimum where
        # rho_bar^n = 2/(2-n): for n = 1 that is exactly 2 rho_T.  (The
        # closed form rho_T (1 - n/2)^(-1/n) is pinned here by golden-section
        # search; see the acceptance module for the criterion-level check.)
        p = ModelParams(n=1, ell=2)
        lo, hi = 1.0001 * p.rho_t, 10.0 * p.rho_t
        invphi = (math.sqrt(5.0) - 1.0) / 2.0
        a, b = lo, hi
        c, d = b - invphi * (b - a), a + invphi * (b - a)
        for _ in range(200):
            if slope_rho_theta(p, c) < slope_rho_theta(p, d):
                b = d
            else:
                a = c
            c, d = b - invphi * (b - a), a + invphi * (b - a)
        argmin = 0.5 * (a + b)
        assert argmin == pytest.approx((2.0 / (2.0 - p.n)) ** (1.0 / p.n) * p.rho_t, rel=1e-6)
        assert slope_rho_theta(p, argmin) == pytest.approx(2.0 * p.rho_t / math.sqrt(3.0), rel=1e-9)

    def test_n3_decay(self):
        p = ModelParams(n=3, ell=2)
        assert slope_rho_theta(p, 100.0 * p.rho_t) < 0.1 * p.rho_t
        assert slope_rho_theta(p, 1e4 * p.rho_t) < slope_rho_theta(p, 100.0 * p.rho_t)


class TestCanonicalKappa:
    def test_elliptic_sign_frozen(self):
        # n=2, ell=0, rho = rho_T/2: Delta = -3/4, value (2 + 2 (9/16)) / (4 (3/4)^1.5)
        p = ModelParams(n=2, ell=0)
        expected = (2.0 + 2.0 * 0.5625) / (4.0 * 0.75 ** 1.5)
        assert canonical_kappa(p, 0.5 * p.rho_t, "elliptic") == pytest.approx(expected, rel=1e-13)
        assert expected > 0.0

    def test_hyperbolic_blowup_toward_sonic(self, m22):
        vals = [canonical_kappa(m22, (1.0 + eps) * m22.rho_t, "hyperbolic") for eps in (0.3, 0.1, 0.03, 0.01)]
        assert all(abs(v2) > abs(v1) for v1, v2 in zip(vals, vals[1:]))

    def test_branch_region_mismatch(self, m22):
        with pytest.raises(RegionError):
            canonical_kappa(m22, 0.5 * m22.rho_t, "hyperbolic")
        with pytest.raises(RegionError):
            canonical_kappa(m22, 2.0 * m22.rho_t, "elliptic")

    def test_flow_identity_along_mu(self, m22):
        # Lambda = dOmega/dmu satisfies Lambda' + 4 kappa_h Lambda = 0 along mu
        p = m22

        def lam_of_rho(rho):
            return omega_slope(p, rho) * rho / math.sqrt(discriminant(p, rho))

        rho = 1.6 * p.rho_t
        dmu_drho = math.sqrt(discriminant(p, rho)) / rho
        dlam_drho = fd_derivative(lam_of_rho, rho, h=1e-6 * p.rho_t)
        lam_prime_mu = dlam_drho / dmu_drho
        residual = lam_prime_mu + 4.0 * canonical_kappa(p, rho, "hyperbolic") * lam_of_rho(rho)
        assert abs(residual) / abs(lam_prime_mu) < 1e-4


class TestHillSubstitution:
    def test_zeta_derivative_recurrence_branch(self, m22):
        # ell = n k with k = 1: closed antiderivative through Ei
        rho = 0.7 * m22.rho_t
        fd = fd_derivative(lambda r: hill_substitution_zeta(m22, r), rho, h=1e-7 * m22.rho_t)
        assert fd == pytest.approx(zeta_bar(m22, rho), rel=1e-6)

    def test_zeta_derivative_series_branch(self):
        p = ModelParams(n=2, ell=2.5)
        rho = 1.4 * p.rho_t
        fd = fd_derivative(lambda r: hill_substitution_zeta(p, r), rho, h=1e-7 * p.rho_t)
        assert fd == pytest.approx(zeta_bar(p, rho), rel=1e-6)

    def test_zeta_second_order_equation(self, m22):
        # zeta'' + (g / rho) zeta' = 0
        rho = 0.7 * m22.rho_t
        h = 1e-4 * m22.rho_t
        z = lambda r: hill_substitution_zeta(m22, r)
        second = (z(rho + h) - 2.0 * z(rho) + z(rho - h)) / h ** 2
        first = (z(rho + h) - z(rho - h)) / (2.0 * h)
        residual = second + coeff_g(m22, rho) / rho * first
        assert abs(residual) / max(abs(second), abs(first / rho)) < 1e-6

    def test_recurrence_derivative_is_integrand(self, m22):
        # d J_{n,k}/dx = exp(beta_k x^n) / x^(kn+1) for the k = ell/n branch;
        # checked through zeta: dzeta/drho = c0 rho_T J'(rho_bar) / rho_T
        rho = 1.1 * m22.rho_t
        x = m22.rho_bar(rho)
        beta = 1 + 1.0 / m22.n
        integrand = math.exp(beta * x ** m22.n) / x ** (m22.ell + 1.0)
        fd = fd_derivative(lambda r: hill_substitution_zeta(m22, r), rho, h=1e-7 * m22.rho_t)
        assert fd == pytest.approx(m22.c0 * integrand, rel=1e-6)

    def test_oscillator_coefficient_signs(self, m22):
        assert hill_coefficient_G(m22, 2.0, m22.rho_t) == pytest.approx(0.0, abs=1e-20)
        assert hill_coefficient_G(m22, 2.0, 1.5 * m22.rho_t) > 0.0
        assert hill_coefficient_G(m22, 2.0, 0.5 * m22.rho_t) < 0.0
        assert classify(m22, 1.5 * m22.rho_t) is RegionTag.HYPERBOLIC

    def test_oscillator_equation_residual(self, m22):
        # reparametrize R by zeta and check R'' + G R = 0 by finite differences
        lam = 1.0
        sol = RadialSolution.kummer(m22, lam)

        def r_of_zeta(zeta_target, rho_guess):
            rho = rho_guess
            for _ in range(60):
                f = hill_substitution_zeta(m22, rho) - zeta_target
                rho -= f / zeta_bar(m22, rho)
            return radial_kummer(m22, sol, rho), rho

        rho0 = 0.8 * m22.rho_t
        z0 = hill_substitution_zeta(m22, rho0)
        dz = 1e-3 * abs(z0)
        vals = []
        rho_guess = rho0
        for i in (-2, -1, 0, 1, 2):
            val, rho_guess = r_of_zeta(z0 + i * dz, rho_guess)
            vals.append(val)
        second = (-vals[4] + 16.0 * vals[3] - 30.0 * vals[2] + 16.0 * vals[1] - vals[0]) / (12.0 * dz ** 2)
        g_coef = hill_coefficient_G(m22, lam, rho0)
        residual = second + g_coef * vals[2]
        assert abs(residual) / max(abs(second), abs(g_coef * vals[2])) < 1e-4


def _radial_second_derivative(params, sol, rho):
    """Exact d2R/drho2 via contiguity relations (no finite differences)."""
    from hodoflow import specfun

    rb = params.rho_bar(rho)
    tau = params.tau(rho)
    n = params.n
    if sol.kind.tricomi:
        t0 = specfun.tricomi_psi(sol.a, sol.b, tau)
        t1 = specfun.tricomi_psi_deriv(sol.a, sol.b, tau)
        t2 = sol.a * (sol.a + 1.0) * specfun.tricomi_psi(sol.a + 2.0, sol.b + 2.0, tau)
    else:
        t0 = kummer_m(sol.a, sol.b, tau)
        t1 = specfun.kummer_m_deriv(sol.a, sol.b, tau)
        t2 = sol.a * (sol.a + 1.0) / (sol.b * (sol.b + 1.0)) * kummer_m(sol.a + 2.0, sol.b + 2.0, tau)
    nu = sol.nu
    d2 = sol.scale * rb ** (nu - 2.0) * (
        nu * (nu - 1.0) * t0 + n * tau * t1 * (2.0 * nu + n - 1.0) + n * n * tau * tau * t2
    )
    return d2 / params.rho_t ** 2


class TestRadialSolutions:
    @pytest.mark.parametrize(
        "n, ell, lam, branch, tricomi",
        [
            (2, 0, 2.0, "+", False),
            (2, 4, 3.0, "+", False),
            (2, 2, 4.0, "+", False),
            (2, 2.5, 1.7, "+", False),
            (2, 2.5, 1.7, "-", False),
            (2, 0.5, 2.0, "+", True),
            (3, 1.5, 2.2, "+", False),
        ],
    )
    def test_radial_ode_analytic(self, n, ell, lam, branch, tricomi):
        # R'' + g (R'/rho - lam^2 R / rho^2) = 0 with exact derivatives
        p = ModelParams(n=n, ell=ell)
        sol = RadialSolution.kummer(p, lam, branch=branch, tricomi=tricomi)
        for rho in (0.45 * p.rho_t, 0.9 * p.rho_t, 1.7 * p.rho_t):
            r0, r1 = radial_value_slope(p, sol, rho)
            r2 = _radial_second_derivative(p, sol, rho)
            g = coeff_g(p, rho)
            residual = r2 + g * (r1 / rho - lam ** 2 * r0 / rho ** 2)
            scale = max(abs(r2), abs(g * r1 / rho), abs(g * lam ** 2 * r0 / rho ** 2), 1e-300)
            assert abs(residual) / scale < 1e-9

    def test_radial_ode_fd(self, m22):
        sol = RadialSolution.kummer(m22, 1.0)
        rho = 0.6 * m22.rho_t
        h = 1e-4 * m22.rho_t
        r = lambda x: radial_kummer(m22, sol, x)
        second = (r(rho + h) - 2.0 * r(rho) + r(rho - h)) / h ** 2
        first = (r(rho + h) - r(rho - h)) / (2.0 * h)
        g = coeff_g(m22, rho)
        residual = second + g * (first / rho - 1.0 * r(rho) / rho ** 2)
        assert abs(residual) / max(abs(g * first / rho), 1e-30) < 1e-5

    def test_lambda_one_is_linear(self, m22):
        # nu+ = 1 and a+ = 0, so R = rho_bar exactly
        sol = RadialSolution.kummer(m22, 1.0)
        assert sol.nu == pytest.approx(1.0, abs=1e-14)
        assert sol.a == pytest.approx(0.0, abs=1e-14)
        for rho in (0.3, 1.1, 2.7):
            assert radial_kummer(m22, sol, rho) == pytest.approx(m22.rho_bar(rho), rel=1e-14)

    def test_lambda_zero_exponents(self, m22):
        nu_p, nu_m = nu_roots(m22.ell, 0.0)
        assert nu_p == 0.0
        assert nu_m == -m22.ell

    def test_invalid_branches_rejected(self):
        # the minus branch of (n, ell) = (2, 0) at lam = 2 lands on a
        # non-positive-integer second parameter: no regular-M solution there
        p = ModelParams(n=2, ell=0)
        with pytest.raises(ParameterError):
            RadialSolution.kummer(p, 2.0, branch="-")
        # Tricomi kinds refuse integer b outright (logarithmic case unbuilt)
        with pytest.raises(ParameterError):
            RadialSolution.kummer(ModelParams(n=2, ell=2), 1.0, tricomi=True)

    def test_series_caps(self):
        p = ModelParams(n=2, ell=2.5)  # series branches
        big = 8.0 * p.rho_t  # rho_bar^n = 64 > cap
        from hodoflow.errors import DomainError

        with pytest.raises(DomainError):
            hill_substitution_zeta(p, big)
        with pytest.raises(DomainError):
            hyperbolic_omega(ModelParams(n=2, ell=1.3), big)

    def test_frobenius_roots_match(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            ell = rng.uniform(-0.9, 12.0)
            lam = rng.uniform(0.0, 5.0)
            a1, a2 = nu_roots(ell, lam)
            b1, b2 = frobenius_roots(ell, lam)
            assert a1 == pytest.approx(b1, rel=1e-14, abs=1e-14)
            assert a2 == pytest.approx(b2, rel=1e-14, abs=1e-14)


class TestHyperbolicOmega:
    def test_slope_matches_zeta_bar_when_matched(self, m22):
        p = m22.with_(c1=omega_matched_c1(m22))
        for rho in (1.2 * p.rho_t, 1.8 * p.rho_t, 2.6 * p.rho_t):
            assert omega_slope(p, rho) == pytest.approx(zeta_bar(p, rho), rel=1e-10)

    def test_fd_slope(self):
        p = ModelParams(n=2, ell=0, c1=1.7, c2=0.4)
        rho = 1.8 * p.rho_t
        fd = fd_derivative(lambda r: hyperbolic_omega(p, r), rho, h=1e-7 * p.rho_t)
        assert fd == pytest.approx(omega_slope(p, rho), rel=1e-6)

    def test_series_branch_fd_slope(self):
        p = ModelParams(n=2, ell=1.3, c1=0.9)
        rho = 1.5 * p.rho_t
        fd = fd_derivative(lambda r: hyperbolic_omega(p, r), rho, h=1e-7 * p.rho_t)
        assert fd == pytest.approx(omega_slope(p, rho), rel=1e-6)

    def test_region_error(self, m22):
        with pytest.raises(RegionError):
            hyperbolic_omega(m22, 0.9 * m22.rho_t)

    def test_branch_continuity_on_differences(self):
        # The ell = nk closed form and the nearby-series values agree on
        # differences (both are antiderivative families; the additive
        # constant diverges as ell -> nk and cancels here).
        rho_a, rho_b = 2.4, 3.4
        ref = ModelParams(n=2, ell=2)
        d_ref = hyperbolic_omega(ref, rho_b) - hyperbolic_omega(ref, rho_a)
        for ell in (2.0 - 1e-6, 2.0 + 1e-6):
            p = ModelParams(n=2, ell=ell)
            d = hyperbolic_omega(p, rho_b) - hyperbolic_omega(p, rho_a)
            assert d == pytest.approx(d_ref, rel=1e-4)


class TestMuPlus:
    def test_zero_on_sonic_circle(self, m22):
        assert mu_plus(m22, m22.rho_t) == 0.0

    def test_strictly_increasing(self, m22):
        rhos = np.linspace(m22.rho_t, 3.0 * m22.rho_t, 40)
        vals = [mu_plus(m22, float(r)) for r in rhos]
        assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_derivative_in_eps(self, m22):
        # d mu / d eps = sqrt(ell+1)/n * sqrt(eps)/(1+eps)
        rho = 1.7 * m22.rho_t
        eps = m22.rho_bar(rho) ** m22.n - 1.0

        def mu_of_eps(e):
            rb = (e + 1.0) ** (1.0 / m22.n)
            return mu_plus(m22, rb * m22.rho_t)

        fd = fd_derivative(mu_of_eps, eps, h=1e-6)
        expected = math.sqrt(m22.ell + 1.0) / m22.n * math.sqrt(eps) / (1.0 + eps)
        assert fd == pytest.approx(expected, rel=1e-6)


class TestAngularFactor:
    def test_sine_case_frozen(self):
        fac = AngularFactor(lam=3.0, c1=1.0, c2=0.0)
        assert fac.value(math.pi / 12.0) == pytest.approx(math.sin(math.pi / 4.0), rel=1e-15)
        assert fac.logderiv(math.pi / 12.0) == pytest.approx(3.0, rel=1e-13)

    def test_extremum_angle(self):
        for c1, c2, lam in [(1.0, 0.0, 3.0), (0.7, -0.4, 2.0), (1.3, 2.2, 4.0)]:
            fac = AngularFactor(lam=lam, c1=c1, c2=c2)
            th_e = fac.extremum_angle()
            assert fac.deriv(th_e) == pytest.approx(0.0, abs=1e-12 * (abs(c1) + abs(c2)) * lam)

    def test_logderiv_fd(self):
        fac = AngularFactor(lam=2.0, c1=0.8, c2=0.5)
        for theta in (0.3, 1.2):
            fd = fd_derivative(lambda t: math.log(abs(fac.value(t))), theta, h=1e-6)
            assert fac.logderiv(theta) == pytest.approx(fd, rel=1e-6)
        lin = AngularFactor(lam=0.0, c1=1.5, c2=0.3)
        fd = fd_derivative(lambda t: math.log(abs(lin.value(t))), 0.9, h=1e-7)
        assert lin.logderiv(0.9) == pytest.approx(fd, rel=1e-6)

    def test_node_error(self):
        fac = AngularFactor(lam=3.0, c1=1.0, c2=0.0)
        with pytest.raises(NodeError):
            fac.logderiv(math.pi / 3.0)

    def test_validation(self):
        with pytest.raises(ParameterError):
            AngularFactor(lam=2.0, c1=0.0, c2=0.0)


class TestLaguerreEnumeration:
    def test_catalog_lambda2(self):
        rows = laguerre_enumerate(2.0, [2.0], ell_max=100.0)
        assert [(c.k, c.ell, c.alpha_bar) for c in rows] == [(1, 0.0, 2.0)]

    def test_catalog_lambda3(self):
        rows = laguerre_enumerate(2.0, [3.0], ell_max=100.0)
        assert [(c.k, c.ell, c.alpha_bar) for c in rows] == [(1, 20.0, 17.0), (2, 4.0, 7.0), (3, 0.0, 3.0)]

    def test_catalog_lambda4(self):
        rows = laguerre_enumerate(2.0, [4.0], ell_max=100.0)
        expected = [
            (1, 90.0, 59.0),
            (2, 32.0, 28.0),
            (3, 14.0, 17.0),
            (4, 6.0, 11.0),
            (5, 2.0, 7.0),
            (6, 0.0, 4.0),
            (7, -6.0 / 7.0, 11.0 / 7.0),
        ]
        got = [(c.k, c.ell, c.alpha_bar) for c in rows]
        assert len(got) == len(expected)
        for (k, ell, ab), (ek, eell, eab) in zip(got, expected):
            assert k == ek
            assert ell == pytest.approx(eell, abs=1e-12)
            assert ab == pytest.approx(eab, abs=1e-12)

    def test_fixed_ell_catalog(self):
        # Every k >= 1 admits one valid lam; the six rows with integer lam^2
        # form the classic sample and must appear exactly.  All other rows
        # must still satisfy the defining condition (checked by the
        # LaguerreCase constructor and re-checked here).
        rows = laguerre_enumerate_for_ell(2.0, 2.0, k_max=12)
        got = {c.k: (round(c.lam ** 2, 9), round(c.alpha_bar, 9)) for c in rows}
        sample = {0: (1.0, 2.0), 1: (5.0, 4.0), 2: (8.0, 5.0), 5: (16.0, 7.0), 7: (21.0, 8.0), 12: (33.0, 10.0)}
        for k, (lam2, ab) in sample.items():
            assert got[k] == (lam2, ab)
        for c in rows:
            if c.k == 0:
                continue
            lam2 = c.lam ** 2
            assert c.k * 2.0 * 2.0 == pytest.approx((lam2 - 2.0 * c.k) ** 2 - lam2, rel=1e-9)
        assert sorted(got) == list(range(13))

    def test_brute_force_confirms_lambda4_order5(self):
        # the (n, ell) = (2, 2) row at lam = 4: a coarse scan over k agrees
        hits = brute_force_orders(2.0, 2.0, 4.0)
        assert hits == [5]

    def test_degeneration_parameter_consistency(self):
        # for every case, a+ = -k and b+ = 1 + alpha_bar
        for case in laguerre_enumerate(2.0, [2.0, 3.0, 4.0], ell_max=100.0):
            nu_p, _ = nu_roots(case.ell, case.lam)
            a, b = kummer_ab(case.n, case.ell, nu_p, case.lam)
            assert a == pytest.approx(-case.k, abs=1e-9)
            assert b == pytest.approx(1.0 + case.alpha_bar, abs=1e-9)

    def test_empty_below_one(self):
        assert laguerre_enumerate(2.0, [0.5, 0.9], ell_max=100.0) == []

    def test_invalid_case_rejected(self):
        with pytest.raises(ParameterError):
            LaguerreCase(lam=3.0, k=2, n=2.0, ell=5.0, alpha_bar=7.0)  # ell should be 4


class TestFactorizedU:
    def test_pde_residual_laguerre_case(self):
        p = ModelParams(n=2, ell=4)
        case = LaguerreCase(lam=3.0, k=2, n=2.0, ell=4.0, alpha_bar=7.0)
        sol = RadialSolution.from_laguerre_case(p, case)
        fac = AngularFactor(lam=3.0, c1=1.0, c2=0.0)
        domain = SectorDomain(0.4 * p.rho_t, 1.9 * p.rho_t, 0.15, 0.9)
        report = verify.pde_residual_momentum(
            p, lambda r, t: factorized_u(p, sol, fac, r, t), domain, grid=(12, 12), tol=1e-5
        )
        assert report.passed, report

    def test_laguerre_shape(self):
        # u is proportional to rho_bar^nu L_2^(7)(tau) sin(3 theta)
        p = ModelParams(n=2, ell=4)
        case = LaguerreCase(lam=3.0, k=2, n=2.0, ell=4.0, alpha_bar=7.0)
        sol = RadialSolution.from_laguerre_case(p, case)
        fac = AngularFactor(lam=3.0, c1=1.0, c2=0.0)
        for rho, theta in [(0.8, 0.3), (2.3, 0.5), (3.9, 1.2)]:
            expected = (
                p.rho_bar(rho) ** case.nu_plus
                * laguerre(case.k, case.alpha_bar, p.tau(rho))
                * math.sin(3.0 * theta)
            )
            assert factorized_u(p, sol, fac, rho, theta) == pytest.approx(expected, rel=1e-12)

    def test_angular_periodicity(self, m22):
        sol = RadialSolution.kummer(m22, 4.0)
        fac = AngularFactor(lam=4.0, c1=0.6, c2=0.2)
        rho = 1.3
        for theta in (0.1, 0.9):
            assert factorized_u(m22, sol, fac, rho, theta) == pytest.approx(
                factorized_u(m22, sol, fac, rho, theta + math.pi / 2.0), rel=1e-12
            )

    def test_lambda_mismatch_rejected(self, m22):
        sol = RadialSolution.kummer(m22, 2.0)
        fac = AngularFactor(lam=3.0)
        with pytest.raises(ParameterError):
            factorized_u(m22, sol, fac, 1.0, 0.5)
