"""Independent numerical oracles and residual reports.

Nothing here reuses the closed forms it checks: derivatives come from
central-difference stencils, integrals from adaptive quadrature
(scipy.integrate behind this module's contract), and coordinate-space
residuals from finite differences over charts reconstructed point-by-point
with the numerical inverse map.  Reports are deterministic for fixed grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import integrate

from . import mapping
from .errors import DomainError, NodeError, NoConvergenceError, ParameterError
from .maxwell import ModelParams, coeff_h
from .mapping import SectorDomain
from .momentum import AngularFactor, RadialSolution

_EPS = float(np.finfo(float).eps)

#: Default steps from the truncation/roundoff balance, relative to the scale
#: of the differentiated variable.
FD_STEP_FIRST = math.sqrt(_EPS)
FD_STEP_SECOND = _EPS ** (1.0 / 3.0)


@dataclass(frozen=True)
class VerificationReport:
    """Residual statistics of one oracle check.

    ``max_abs`` and ``rms`` are already normalized by ``rel_scale`` when the
    check uses per-point scales (then ``rel_scale`` is 1.0); a report passes
    iff ``max_abs / rel_scale <= tol``.  ``skipped_points`` counts flagged
    nodes and degenerate points, which must stay below 5% of the grid.
    """

    name: str
    grid_spec: str
    max_abs: float
    rms: float
    rel_scale: float
    tol: float
    skipped_points: int = 0
    total_points: int = 0

    @property
    def passed(self) -> bool:
        ok = self.max_abs / self.rel_scale <= self.tol
        if self.total_points > 0:
            ok = ok and self.skipped_points <= 0.05 * self.total_points
        return ok

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "grid_spec": self.grid_spec,
            "max_abs": self.max_abs,
            "rms": self.rms,
            "rel_scale": self.rel_scale,
            "tol": self.tol,
            "pass": self.passed,
            "skipped_points": self.skipped_points,
        }


def report_from_residuals(
    name: str,
    grid_spec: str,
    residuals: Sequence[float],
    tol: float,
    skipped: int = 0,
    total: int | None = None,
) -> VerificationReport:
    arr = np.asarray([r for r in residuals if math.isfinite(r)], dtype=float)
    if arr.size == 0:
        return VerificationReport(name, grid_spec, math.inf, math.inf, 1.0, tol, skipped, total or skipped)
    return VerificationReport(
        name=name,
        grid_spec=grid_spec,
        max_abs=float(np.max(np.abs(arr))),
        rms=float(np.sqrt(np.mean(arr ** 2))),
        rel_scale=1.0,
        tol=tol,
        skipped_points=skipped,
        total_points=total if total is not None else arr.size + skipped,
    )


def fd_derivative(f: Callable[[float], float], x: float, order: int = 1, h: float | None = None) -> float:
    """Central-difference derivative of a scalar function, O(h^2) truncation."""
    if order == 1:
        hh = h if h is not None else FD_STEP_FIRST * max(abs(x), 1.0)
        return (f(x + hh) - f(x - hh)) / (2.0 * hh)
    if order == 2:
        hh = h if h is not None else FD_STEP_SECOND * max(abs(x), 1.0)
        return (f(x + hh) - 2.0 * f(x) + f(x - hh)) / hh ** 2
    raise ParameterError(f"order must be 1 or 2, got {order}")


def adaptive_quad(f: Callable[[float], float], a: float, b: float, tol: float = 1e-10) -> float:
    """Adaptive quadrature with an explicit 1/r tail substitution for b = inf."""
    if math.isinf(b):
        cut = max(2.0 * abs(a), a + 1.0, 1.0)
        head, err1 = integrate.quad(f, a, cut, epsabs=tol, epsrel=tol, limit=300)
        tail, err2 = integrate.quad(
            lambda t: f(1.0 / t) / t ** 2, 0.0, 1.0 / cut, epsabs=tol, epsrel=tol, limit=300
        )
        value, err = head + tail, err1 + err2
    else:
        value, err = integrate.quad(f, a, b, epsabs=tol, epsrel=tol, limit=300)
    if err > 50.0 * max(tol, tol * abs(value)) + 1e-300:
        raise NoConvergenceError(f"quadrature error estimate {err:.2e} too large for tol {tol:.2e}")
    return value


def quad2d_polar(
    f: Callable[[float, float], float],
    r_range: tuple[float, float],
    phi_range: tuple[float, float],
    tol: float = 1e-9,
) -> float:
    """Iterated adaptive quadrature of f over the polar measure r dr dphi."""
    r_lo, r_hi = r_range

    def ring(r: float) -> float:
        inner, _ = integrate.quad(lambda p: f(r, p), phi_range[0], phi_range[1], epsabs=tol, epsrel=tol, limit=200)
        return inner * r

    return adaptive_quad(ring, r_lo, r_hi, tol=tol)


# ---------------------------------------------------------------------------
# PDE residuals
# ---------------------------------------------------------------------------

def _momentum_residual_at(
    params: ModelParams,
    u_fn: Callable[[float, float], float],
    rho: float,
    theta: float,
    h_rho: float,
    h_theta: float,
) -> float:
    from .maxwell import coeff_g

    u_c = u_fn(rho, theta)
    u_rr = (u_fn(rho + h_rho, theta) - 2.0 * u_c + u_fn(rho - h_rho, theta)) / h_rho ** 2
    u_r = (u_fn(rho + h_rho, theta) - u_fn(rho - h_rho, theta)) / (2.0 * h_rho)
    u_tt = (u_fn(rho, theta + h_theta) - 2.0 * u_c + u_fn(rho, theta - h_theta)) / h_theta ** 2
    g = coeff_g(params, rho)
    t1 = u_rr
    t2 = g * u_r / rho
    t3 = g * u_tt / rho ** 2
    scale = max(abs(t1), abs(t2), abs(t3), (params.ell + 1.0) * abs(u_c) / rho ** 2, 1e-300)
    return (t1 + t2 + t3) / scale


def pde_residual_momentum(
    params: ModelParams,
    u_fn: Callable[[float, float], float],
    domain: SectorDomain,
    grid: tuple[int, int],
    tol: float = 1e-5,
    name: str = "momentum-pde",
    h_rho: float | None = None,
    h_theta: float | None = None,
    h_sweep: bool = False,
) -> VerificationReport:
    """Finite-difference residual of the polar momentum-space equation.

    ``u_rr + g (u_r / rho + u_tt / rho^2)`` normalized per point by the
    largest term magnitude.  Step sizes default to a truncation-dominated
    choice so that an h-sweep (h vs h/2) shrinks residuals ~4x.
    """
    hr = h_rho if h_rho is not None else 2e-4 * params.rho_t
    ht = h_theta if h_theta is not None else 2e-4
    rhos = np.linspace(domain.rho_min, domain.rho_max, grid[0])
    thetas = np.linspace(domain.theta_min, domain.theta_max, grid[1])
    steps = [(hr, ht), (hr / 2.0, ht / 2.0)] if h_sweep else [(hr, ht)]
    sweeps = []
    skipped = 0
    for step_r, step_t in steps:
        residuals = []
        skipped = 0
        for rho in rhos:
            for theta in thetas:
                try:
                    residuals.append(
                        _momentum_residual_at(params, u_fn, float(rho), float(theta), step_r, step_t)
                    )
                except (NodeError, DomainError):
                    skipped += 1
        sweeps.append(residuals)
    grid_note = f"{grid[0]}x{grid[1]} rho[{domain.rho_min:.4g},{domain.rho_max:.4g}] h={hr:.2e}"
    if h_sweep:
        coarse = max(abs(r) for r in sweeps[0])
        fine = max(abs(r) for r in sweeps[1])
        shrank = fine <= coarse / 2.0 or max(coarse, fine) <= 0.1 * tol
        report = report_from_residuals(name, grid_note + " (h-sweep)", sweeps[1], tol,
                                       skipped, len(rhos) * len(thetas))
        if not shrank:
            report = VerificationReport(
                name=report.name, grid_spec=report.grid_spec + " [no-shrink]",
                max_abs=math.inf, rms=report.rms, rel_scale=1.0, tol=tol,
                skipped_points=report.skipped_points, total_points=report.total_points,
            )
        return report
    return report_from_residuals(name, grid_note, sweeps[0], tol, skipped, len(rhos) * len(thetas))


def chart_phi_fn(
    params: ModelParams,
    sol: RadialSolution,
    fac: AngularFactor,
    seed: mapping.MomentumPoint,
) -> Callable[[float, float], float]:
    """Phase Phi as a function of coordinates on one univalent leaf.

    Each call inverts the map by Newton iteration, reusing the previous
    solution as the next seed, so stencil sweeps stay on the seed's leaf.
    """
    state = {"seed": mapping.MomentumPoint(*seed)}

    def phi_at(x: float, y: float) -> float:
        mp = mapping.invert_map(params, sol, fac, (x, y), state["seed"])
        state["seed"] = mp
        return mapping.forward_map(params, sol, fac, mp.rho, mp.theta).phi_val

    return phi_at


def chart_phi_fn_radial(params: ModelParams) -> Callable[[float, float], float]:
    """Phase of the angularly symmetric flow as a function of coordinates."""

    def phi_at(x: float, y: float) -> float:
        r = math.hypot(x, y)
        rho = mapping.invert_map_radial(params, r)
        return mapping.forward_map_radial(params, rho, math.atan2(y, x)).phi_val

    return phi_at


def coordinate_pde_residual_at(
    params: ModelParams,
    phi_at: Callable[[float, float], float],
    x0: float,
    y0: float,
    h: float,
) -> float:
    """Residual of the quasilinear coordinate-space equation at one point.

    All five second-order stencil combinations are taken from a 3x3 patch of
    Phi values; the coefficient h_{n,ell} is evaluated at the local speed
    |alpha grad Phi|.
    """
    patch = {}
    for i in (-1, 0, 1):
        for j in (-1, 0, 1):
            patch[(i, j)] = phi_at(x0 + i * h, y0 + j * h)
    phi_x = (patch[(1, 0)] - patch[(-1, 0)]) / (2.0 * h)
    phi_y = (patch[(0, 1)] - patch[(0, -1)]) / (2.0 * h)
    phi_xx = (patch[(1, 0)] - 2.0 * patch[(0, 0)] + patch[(-1, 0)]) / h ** 2
    phi_yy = (patch[(0, 1)] - 2.0 * patch[(0, 0)] + patch[(0, -1)]) / h ** 2
    phi_xy = (patch[(1, 1)] - patch[(1, -1)] - patch[(-1, 1)] + patch[(-1, -1)]) / (4.0 * h ** 2)
    speed = abs(params.alpha) * math.hypot(phi_x, phi_y)
    h_coef = coeff_h(params, speed)
    t1 = (1.0 + phi_x ** 2 * h_coef) * phi_xx
    t2 = 2.0 * h_coef * phi_x * phi_y * phi_xy
    t3 = (1.0 + phi_y ** 2 * h_coef) * phi_yy
    scale = max(abs(t1), abs(t2), abs(t3), 1e-300)
    return (t1 + t2 + t3) / scale


def pde_residual_coordinate(
    params: ModelParams,
    phi_at: Callable[[float, float], float],
    probes: Sequence[tuple[float, float]],
    tol: float = 1e-3,
    name: str = "coordinate-pde",
    h_rel: float = 1e-3,
    h_sweep: bool = True,
) -> VerificationReport:
    """Quasilinear-equation residual at coordinate probe points, with h-sweep.

    ``probes`` are coordinate points strictly inside a univalent leaf with
    the inverse Jacobian bounded away from zero; fold events propagate.
    """
    sweeps = []
    skipped = 0
    for factor in (1.0, 0.5) if h_sweep else (1.0,):
        residuals = []
        skipped = 0
        for (x0, y0) in probes:
            h = h_rel * factor * max(math.hypot(x0, y0), 1e-6)
            try:
                residuals.append(coordinate_pde_residual_at(params, phi_at, x0, y0, h))
            except (NodeError, DomainError):
                skipped += 1
        sweeps.append(residuals)
    note = f"{len(probes)} probes h_rel={h_rel:.1e}"
    if h_sweep:
        coarse = max((abs(r) for r in sweeps[0]), default=math.inf)
        fine = max((abs(r) for r in sweeps[1]), default=math.inf)
        report = report_from_residuals(name, note + " (h-sweep)", sweeps[1], tol, skipped, len(probes))
        if not (fine <= coarse / 2.0 or max(coarse, fine) <= 0.1 * tol):
            report = VerificationReport(
                name=report.name, grid_spec=report.grid_spec + " [no-shrink]",
                max_abs=math.inf, rms=report.rms, rel_scale=1.0, tol=tol,
                skipped_points=report.skipped_points, total_points=report.total_points,
            )
        return report
    return report_from_residuals(name, note, sweeps[0], tol, skipped, len(probes))
