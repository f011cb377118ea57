"""Distribution family, induced coefficients, and region classification."""

import math

import numpy as np
import pytest

from hodoflow import verify
from hodoflow.errors import DivergenceError, DomainError, ParameterError
from hodoflow.maxwell import (
    EPS_PARABOLIC,
    ModelParams,
    RegionTag,
    classify,
    coeff_g,
    coeff_h,
    coeff_h_bar,
    density_F,
    density_F_speed_integral,
    discriminant,
    normalization_psi_model,
)
from hodoflow.specfun import gamma


@pytest.fixture
def maxwell22():
    return ModelParams(n=2, ell=2)


class TestModelParams:
    def test_defaults_give_order_one_scales(self, maxwell22):
        assert maxwell22.rho_t == pytest.approx(2.0)
        assert maxwell22.sigma_nl > 0.0
        # the velocity at the sonic circle equals sigma_v exactly
        assert abs(maxwell22.alpha) * maxwell22.rho_t == pytest.approx(maxwell22.sigma_v, rel=1e-15)

    @pytest.mark.parametrize(
        "kw",
        [{"n": 0.0}, {"n": -1.0}, {"ell": -1.0}, {"sigma_v": 0.0}, {"alpha": 0.0}, {"beta": -2.0}],
    )
    def test_validation(self, kw):
        base = dict(n=2, ell=2)
        base.update(kw)
        with pytest.raises(ParameterError):
            ModelParams(**base)


class TestDensity:
    def test_gaussian_case(self):
        p = ModelParams(n=2, ell=0)
        # n=2, ell=0 is a Gaussian in the speed with F(0) = N
        assert density_F(p, 0.0, norm=3.0) == pytest.approx(3.0)
        zs = np.linspace(0.1, 3.0, 7)
        for z in zs:
            assert density_F(p, z) == pytest.approx(math.exp(-0.5 * (z / p.sigma_v) ** 2), rel=1e-13)

    def test_mode_location_fd_oracle(self, maxwell22):
        # F'(z*) = 0 where ell = n z*^n / (sigma_nl^n 2^(n/2))
        p = maxwell22
        zstar = p.sigma_v * (p.ell / (p.ell + 1.0)) ** (1.0 / p.n)
        s2n = p.sigma_nl ** p.n * 2.0 ** (p.n / 2.0)
        assert p.n * zstar ** p.n / s2n == pytest.approx(p.ell, rel=1e-13)
        h = 1e-7
        fd = (density_F(p, zstar + h) - density_F(p, zstar - h)) / (2.0 * h)
        assert abs(fd) < 1e-6 * density_F(p, zstar)

    def test_speed_integral_against_quadrature(self, maxwell22):
        closed = density_F_speed_integral(maxwell22)
        quad = verify.adaptive_quad(lambda z: density_F(maxwell22, z), 0.0, math.inf, tol=1e-12)
        assert closed == pytest.approx(quad, rel=1e-10)
        # and the closed form is (N/n) Gamma((ell+1)/n) sigma_nl sqrt(2)
        assert closed == pytest.approx(
            gamma(3.0 / 2.0) / 2.0 * maxwell22.sigma_nl * math.sqrt(2.0), rel=1e-14
        )

    def test_negative_ell_singularity(self):
        p = ModelParams(n=2, ell=-0.5)
        with pytest.raises(DomainError):
            density_F(p, 0.0)

    def test_norm_linearity(self, maxwell22):
        z = 0.9
        assert density_F(maxwell22, z, norm=2.0) == pytest.approx(2.0 * density_F(maxwell22, z), rel=1e-15)


class TestCoefficients:
    def test_h_negative_for_ell_zero(self):
        p = ModelParams(n=2, ell=0)
        for z in (0.2, 1.0, 4.0):
            assert coeff_h(p, z) < 0.0

    def test_h_forms_agree(self, maxwell22):
        # speed form at z = |alpha| rho vs direct momentum form
        for rho in (0.3, 1.0, 1.3 * maxwell22.rho_t, 2.9):
            z = abs(maxwell22.alpha) * rho
            assert coeff_h(maxwell22, z) == pytest.approx(coeff_h_bar(maxwell22, rho), rel=1e-12)

    def test_g_zero_on_sonic_circle(self, maxwell22):
        assert coeff_g(maxwell22, maxwell22.rho_t) == pytest.approx(0.0, abs=1e-14)
        # consistency: 1 + rho^2 h_bar = g there as well
        rho_t = maxwell22.rho_t
        assert 1.0 + rho_t ** 2 * coeff_h_bar(maxwell22, rho_t) == pytest.approx(0.0, abs=1e-12)

    def test_g_small_rho_limit(self, maxwell22):
        assert coeff_g(maxwell22, 1e-9) == pytest.approx(maxwell22.ell + 1.0, rel=1e-12)

    def test_discriminant_at_twice_rho_t(self):
        # algebraic consequence of the sigma_nl tie: Delta(2 rho_T) = (ell+1)(2^n - 1)
        for n, ell in [(2, 2), (3, 0.5), (1, 4)]:
            p = ModelParams(n=n, ell=ell)
            assert discriminant(p, 2.0 * p.rho_t) == pytest.approx((ell + 1.0) * (2.0 ** n - 1.0), rel=1e-12)

    def test_g_equals_minus_delta_everywhere(self, maxwell22):
        rng = np.random.default_rng(5)
        for rho in rng.uniform(0.05, 5.0, size=50):
            assert coeff_g(maxwell22, rho) == -discriminant(maxwell22, rho)

    def test_rho_gprime_identity(self, maxwell22):
        # rho g'(rho) = n (g - 1 - ell), by central differences
        for rho in (0.7, 1.9, 3.1):
            fd = verify.fd_derivative(lambda r: coeff_g(maxwell22, r), rho, order=1, h=1e-6)
            lhs = rho * fd
            rhs = maxwell22.n * (coeff_g(maxwell22, rho) - 1.0 - maxwell22.ell)
            assert lhs == pytest.approx(rhs, rel=1e-6)


class TestClassify:
    def test_three_regions(self, maxwell22):
        rt = maxwell22.rho_t
        assert classify(maxwell22, 0.5 * rt) is RegionTag.ELLIPTIC
        assert classify(maxwell22, rt) is RegionTag.PARABOLIC
        assert classify(maxwell22, 2.0 * rt) is RegionTag.HYPERBOLIC

    def test_band_width(self, maxwell22):
        rt = maxwell22.rho_t
        assert classify(maxwell22, rt * (1.0 + 0.5 * EPS_PARABOLIC)) is RegionTag.PARABOLIC
        assert classify(maxwell22, rt * (1.0 + 10.0 * EPS_PARABOLIC)) is RegionTag.HYPERBOLIC

    def test_monotone_thresholds(self, maxwell22):
        # elliptic radii all below parabolic band, hyperbolic all above
        order = {RegionTag.ELLIPTIC: 0, RegionTag.PARABOLIC: 1, RegionTag.HYPERBOLIC: 2}
        tags = [order[classify(maxwell22, rho)] for rho in np.linspace(0.01, 5.0, 400)]
        assert tags == sorted(tags)


class TestNormalization:
    def test_psi_model_closed_form_4_6(self):
        sigma = 1.3
        n_const = normalization_psi_model(4.0, 6.0, sigma)
        expected_inv = (2.0 * math.pi * sigma ** 2 / 4.0) * (7.0 / 4.0) ** 0.5 * gamma(1.0)
        assert 1.0 / n_const == pytest.approx(expected_inv, rel=1e-14)

    def test_psi_model_quadrature_oracle(self):
        from hodoflow.potentials import PsiModelParams, psi_density

        pm = PsiModelParams(n=4, ell=6, sigma_r=1.3, rho_t=2.0)
        total = verify.quad2d_polar(
            lambda r, phi: psi_density(pm, r), (0.0, math.inf), (0.0, 2.0 * math.pi), tol=1e-10
        )
        assert total == pytest.approx(1.0, rel=1e-8)

    def test_divergence_for_small_ell(self):
        with pytest.raises(DivergenceError):
            normalization_psi_model(2.0, 2.0, 1.0)

    def test_sector_normalization_midpoint_oracle(self):
        # N over a univalent hyperbolic sector image; re-integrated with a
        # plain midpoint rule (independent integrator) the mass must be ~1
        import math

        from hodoflow.mapping import SectorDomain, forward_map
        from hodoflow.maxwell import normalization_sector
        from hodoflow.momentum import AngularFactor, LaguerreCase, RadialSolution

        p = ModelParams(n=2, ell=0)
        case = LaguerreCase(lam=2.0, k=1, n=2.0, ell=0.0, alpha_bar=2.0)
        sol = RadialSolution.from_laguerre_case(p, case)
        fac = AngularFactor(lam=2.0, c1=0.0, c2=1.0)
        dom = SectorDomain(1.9 * p.rho_t, 2.3 * p.rho_t, -0.15, 0.15)
        n_const = normalization_sector(p, sol, fac, dom, tol=1e-10)

        m_r, m_t = 160, 80
        dr = (dom.rho_max - dom.rho_min) / m_r
        dt = (dom.theta_max - dom.theta_min) / m_t
        total = 0.0
        for i in range(m_r):
            rho = dom.rho_min + (i + 0.5) * dr
            f_val = density_F(p, abs(p.alpha) * rho, norm=n_const)
            for j in range(m_t):
                theta = dom.theta_min + (j + 0.5) * dt
                total += f_val * abs(forward_map(p, sol, fac, rho, theta).jac_inv) * rho * dr * dt
        assert total == pytest.approx(1.0, rel=1e-3)
