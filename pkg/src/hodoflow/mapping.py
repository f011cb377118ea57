"""Inverse Legendre transform: from factorized momentum-space solutions to
coordinate-space phase, velocity, and density fields.

The map sends a momentum point (rho, theta) to

    (x, y) = (u / rho) Rot(theta) (Rcal, Upsilon)^T,
    Phi    = u (Rcal - 1),

with ``Rcal = rho R'/R`` and ``Upsilon = Theta'/Theta``.  Internally all
formulas are evaluated through the node-free combinations ``rho R' - R`` and
``R Theta'``, so positions and Jacobians stay finite on nodal lines of Theta
and M; only log-derivative quantities are singular there.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import momentum, specfun
from .errors import (
    DegenerateMapError,
    DomainError,
    FoldError,
    NoConvergenceError,
    NodeError,
    RegionError,
    UnivalenceWarning,
)
from .maxwell import ModelParams, RegionTag, classify, coeff_g, density_F
from .momentum import AngularFactor, RadialKind, RadialSolution
from .specfun import DEFAULT_SERIES, SeriesControl


class MomentumPoint(NamedTuple):
    rho: float
    theta: float


class CoordPoint(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class MapPoint:
    """Image of one momentum point under the inverse Legendre transform."""

    rho: float
    theta: float
    x: float
    y: float
    phi_val: float
    jac_inv: float
    region: RegionTag

    @property
    def xy(self) -> CoordPoint:
        return CoordPoint(self.x, self.y)


@dataclass(frozen=True)
class SectorDomain:
    """Radial momentum sector (angles in radians)."""

    rho_min: float
    rho_max: float
    theta_min: float
    theta_max: float

    def __post_init__(self) -> None:
        if not self.rho_min < self.rho_max:
            raise DomainError(f"need rho_min < rho_max, got [{self.rho_min}, {self.rho_max}]")
        if not self.theta_min < self.theta_max:
            raise DomainError(f"need theta_min < theta_max, got [{self.theta_min}, {self.theta_max}]")
        if self.rho_min <= 0.0:
            raise DomainError(f"need rho_min > 0, got {self.rho_min}")

    def require_hyperbolic(self, params: ModelParams) -> None:
        if self.rho_min <= params.rho_t:
            raise RegionError("hyperbolic sector requires rho_min > rho_T")


@dataclass(frozen=True)
class FieldSample:
    """One coordinate-space record of the mapped flow."""

    x: float
    y: float
    phi: float
    vx: float
    vy: float
    speed: float
    density: float
    q_pot: float
    u_pot: float
    jac_inv: float
    region: RegionTag
    flag: str = field(default="", compare=False)

    CSV_COLUMNS = ("x", "y", "phi", "vx", "vy", "speed", "density", "q_pot", "u_pot", "jac_inv", "region")

    def csv_values(self) -> tuple:
        return (
            self.x, self.y, self.phi, self.vx, self.vy, self.speed,
            self.density, self.q_pot, self.u_pot, self.jac_inv, str(self.region),
        )


def script_R(
    params: ModelParams,
    sol: RadialSolution,
    rho: float,
    control: SeriesControl = DEFAULT_SERIES,
) -> float:
    """Radial log-derivative combination Rcal(rho) = nu + n tau (d/dtau) ln T(tau).

    For the regular branch the log-derivative of M is evaluated through the
    contiguity relation; the singular branch uses Psi'/Psi.  Raises
    :class:`NodeError` on nodal lines of T.
    """
    if sol.kind is RadialKind.CONSTANT:
        return 0.0
    if sol.kind is RadialKind.HYPERBOLIC_OMEGA:
        value = momentum.hyperbolic_omega(params, rho, control)
        if abs(value) < 1e-300:
            raise NodeError("hyperbolic radial solution vanishes; log-derivative pole")
        return rho * momentum.omega_slope(params, rho) / value
    tau = params.tau(rho)
    if sol.kind.tricomi:
        t_val = specfun.tricomi_psi(sol.a, sol.b, tau, control)
        if t_val == 0.0:
            raise NodeError(f"Psi({sol.a}, {sol.b}, {tau}) = 0: log-derivative pole")
        logderiv = specfun.tricomi_psi_deriv(sol.a, sol.b, tau, control) / t_val
    else:
        logderiv = specfun.kummer_logderiv(sol.a, sol.b, tau, control)
    return sol.nu + params.n * tau * logderiv


def _map_core(
    params: ModelParams,
    sol: RadialSolution,
    fac: AngularFactor,
    rho: float,
    theta: float,
    control: SeriesControl,
) -> dict:
    """Node-free building blocks shared by the map, its Jacobian and differential."""
    r_val, r_slope = momentum.radial_value_slope(params, sol, rho, control)
    th_val = fac.value(theta)
    th_der = fac.deriv(theta)
    g = coeff_g(params, rho)
    w1 = rho * r_slope - r_val                       # R (Rcal - 1)
    w2 = rho * r_slope - fac.lam ** 2 * r_val        # R (Rcal - lam^2)
    return {
        "R": r_val, "Rp": r_slope, "Th": th_val, "Thp": th_der,
        "g": g, "w1": w1, "w2": w2,
    }


def forward_map(
    params: ModelParams,
    sol: RadialSolution,
    fac: AngularFactor,
    rho: float,
    theta: float,
    control: SeriesControl = DEFAULT_SERIES,
    allow_degenerate: bool = False,
) -> MapPoint:
    """Image of (rho, theta) in coordinate space, with phase and inverse Jacobian.

    ``lam = 1`` makes the inverse Jacobian vanish identically (the momentum
    solution is affine, so the tangent transform loses uniqueness); by default
    this raises :class:`DegenerateMapError`.  Pass ``allow_degenerate=True``
    to evaluate anyway, e.g. to inspect the vanishing Jacobian.
    """
    if abs(sol.lam - 1.0) <= 1e-12 and not allow_degenerate:
        raise DegenerateMapError(
            "lam = 1: the map Jacobian vanishes identically and no coordinate chart exists"
        )
    c = _map_core(params, sol, fac, rho, theta, control)
    ct, st = math.cos(theta), math.sin(theta)
    x = c["Rp"] * c["Th"] * ct - c["R"] * c["Thp"] * st / rho
    y = c["Rp"] * c["Th"] * st + c["R"] * c["Thp"] * ct / rho
    phi = rho * c["Rp"] * c["Th"] - c["R"] * c["Th"]
    jac_inv = -((c["w1"] * c["Thp"]) ** 2 + c["g"] * (c["w2"] * c["Th"]) ** 2) / rho ** 4
    return MapPoint(rho=rho, theta=theta, x=x, y=y, phi_val=phi, jac_inv=jac_inv,
                    region=classify(params, rho))


def map_differential(
    params: ModelParams,
    sol: RadialSolution,
    fac: AngularFactor,
    rho: float,
    theta: float,
    control: SeriesControl = DEFAULT_SERIES,
) -> np.ndarray:
    """Analytic 2x2 differential d(x, y)/d(rho, theta) of the forward map.

    Uses the radial and angular equations to eliminate second derivatives, so
    it is exact for genuine separated solutions.
    """
    c = _map_core(params, sol, fac, rho, theta, control)
    ct, st = math.cos(theta), math.sin(theta)
    g, w1, w2 = c["g"], c["w1"], c["w2"]
    th, thp = c["Th"], c["Thp"]
    x_rho = (-g * w2 * th * ct - w1 * thp * st) / rho ** 2
    y_rho = (-g * w2 * th * st + w1 * thp * ct) / rho ** 2
    x_theta = (w1 * thp * ct - w2 * th * st) / rho
    y_theta = (w1 * thp * st + w2 * th * ct) / rho
    return np.array([[x_rho, x_theta], [y_rho, y_theta]])


def forward_map_radial(
    params: ModelParams,
    rho: float,
    theta: float,
    control: SeriesControl = DEFAULT_SERIES,
) -> MapPoint:
    """Coordinate image of the angularly symmetric hyperbolic solution.

    The map collapses to ``r = zeta_bar(rho), phi = theta`` and the phase is
    ``Phi = rho zeta_bar(rho) - Omega(rho)`` with the integration constant of
    Omega matched to c0 (so that Omega' = zeta_bar exactly).
    """
    if rho <= params.rho_t:
        raise RegionError(f"the radial map needs rho > rho_T, got rho = {rho}")
    zb = momentum.zeta_bar(params, rho)
    matched = params.with_(c1=momentum.omega_matched_c1(params))
    phi = rho * zb - momentum.hyperbolic_omega(matched, rho, control)
    jac_inv = (params.ell + 1.0) * (params.rho_bar(rho) ** params.n - 1.0) * zb ** 2 / rho ** 2
    return MapPoint(rho=rho, theta=theta, x=zb * math.cos(theta), y=zb * math.sin(theta),
                    phi_val=phi, jac_inv=jac_inv, region=classify(params, rho))


def invert_map_radial(params: ModelParams, r: float, tol: float = 1e-14) -> float:
    """Solve zeta_bar(rho) = r for rho > rho_T (monotone; Newton with bisection fallback)."""
    r_min = momentum.zeta_bar(params, params.rho_t)
    if r < r_min * (1.0 - 1e-12):
        raise DomainError(f"radius {r} below the image floor {r_min}")
    lo = params.rho_t
    hi = params.rho_t * 1.5
    while momentum.zeta_bar(params, hi) < r:
        hi *= 1.5
        if hi > 1e6 * params.rho_t:
            raise NoConvergenceError("could not bracket the radial inverse")
    rho = 0.5 * (lo + hi)
    target = math.log(r)
    for _ in range(200):
        val = math.log(momentum.zeta_bar(params, rho)) - target
        if val > 0.0:
            hi = rho
        else:
            lo = rho
        deriv = (params.ell + 1.0) * (params.rho_bar(rho) ** params.n - 1.0) / rho
        step = val / deriv if deriv > 0.0 else math.inf
        cand = rho - step
        if not lo < cand < hi:
            cand = 0.5 * (lo + hi)  # bisection fallback
        if abs(cand - rho) <= tol * rho:
            return cand
        rho = cand
    raise NoConvergenceError(f"radial inversion stalled at r = {r}")


def invert_map(
    params: ModelParams,
    sol: RadialSolution,
    fac: AngularFactor,
    target: CoordPoint | tuple[float, float],
    seed: MomentumPoint | tuple[float, float],
    max_iter: int = 50,
    control: SeriesControl = DEFAULT_SERIES,
) -> MomentumPoint:
    """Numerical inverse of the forward map by damped Newton iteration.

    The seed must lie on the same univalent leaf as the target; a sign change
    of the inverse Jacobian along the path raises :class:`FoldError` (the
    transform is multivalent there), and failure to converge within
    ``max_iter`` raises :class:`NoConvergenceError`.  Converged points satisfy
    ``|forward(rho, theta) - target| <~ 1e-13 * scale``.
    """
    tx, ty = float(target[0]), float(target[1])
    rho, theta = float(seed[0]), float(seed[1])
    scale = max(math.hypot(tx, ty), 1e-30)
    point = forward_map(params, sol, fac, rho, theta, control)
    sign0 = math.copysign(1.0, point.jac_inv) if point.jac_inv != 0.0 else 0.0
    err = math.hypot(point.x - tx, point.y - ty)
    tol = 1e-13 * scale
    for _ in range(max_iter):
        if err <= tol:
            return MomentumPoint(rho, theta)
        jac = map_differential(params, sol, fac, rho, theta, control)
        det = jac[0, 0] * jac[1, 1] - jac[0, 1] * jac[1, 0]
        if det == 0.0 or not math.isfinite(det):
            raise NoConvergenceError("singular differential on the Newton path")
        fx, fy = point.x - tx, point.y - ty
        drho = -(jac[1, 1] * fx - jac[0, 1] * fy) / det
        dtheta = -(-jac[1, 0] * fx + jac[0, 0] * fy) / det
        # backtracking: keep rho positive and the residual decreasing
        lam_step = 1.0
        for _bt in range(30):
            cand_rho = rho + lam_step * drho
            cand_theta = theta + lam_step * dtheta
            if cand_rho > 0.0:
                try:
                    cand = forward_map(params, sol, fac, cand_rho, cand_theta, control)
                except (DomainError, NodeError):
                    cand = None
                if cand is not None:
                    cand_err = math.hypot(cand.x - tx, cand.y - ty)
                    if cand_err < err or lam_step < 1e-6:
                        if sign0 != 0.0 and cand.jac_inv * sign0 < 0.0:
                            raise FoldError(
                                "inverse Jacobian changed sign on the Newton path: "
                                "target lies beyond a fold of the transform"
                            )
                        rho, theta, point, err = cand_rho, cand_theta, cand, cand_err
                        break
            lam_step *= 0.5
        else:
            raise NoConvergenceError("Newton backtracking could not reduce the residual")
    if err <= tol:
        return MomentumPoint(rho, theta)
    raise NoConvergenceError(f"no convergence after {max_iter} iterations (residual {err:.3e})")


def _nan_sample(point: MapPoint, params: ModelParams, flag: str) -> FieldSample:
    speed = abs(params.alpha) * point.rho
    vx = -params.alpha * point.rho * math.cos(point.theta)
    vy = -params.alpha * point.rho * math.sin(point.theta)
    return FieldSample(
        x=point.x, y=point.y, phi=point.phi_val, vx=vx, vy=vy, speed=speed,
        density=math.nan, q_pot=math.nan, u_pot=math.nan,
        jac_inv=point.jac_inv, region=point.region, flag=flag,
    )


def _grid(domain: SectorDomain, shape: tuple[int, int]) -> tuple[np.ndarray, np.ndarray]:
    n_rho, n_theta = shape
    if n_rho < 2 or n_theta < 2:
        raise DomainError(f"grid must be at least 2x2, got {shape}")
    return (
        np.linspace(domain.rho_min, domain.rho_max, n_rho),
        np.linspace(domain.theta_min, domain.theta_max, n_theta),
    )


def sample_fields(
    params: ModelParams,
    sol: RadialSolution,
    fac: AngularFactor,
    domain: SectorDomain,
    grid: tuple[int, int],
    norm: float = 1.0,
    control: SeriesControl = DEFAULT_SERIES,
) -> list[FieldSample]:
    """Full field records on a (rho, theta) product grid, row-major in rho.

    Individual nodal or degenerate points are flagged and carry NaN in the
    affected columns; the sweep itself never aborts.  A sign change of the
    inverse Jacobian across the grid only warns (:class:`UnivalenceWarning`),
    matching the policy that leaf selection is the caller's responsibility.
    """
    from . import potentials  # deferred: potentials depends on this module

    rhos, thetas = _grid(domain, grid)
    samples: list[FieldSample] = []
    signs: set[float] = set()
    for rho in rhos:
        for theta in thetas:
            point = forward_map(params, sol, fac, float(rho), float(theta), control)
            if point.jac_inv != 0.0:
                signs.add(math.copysign(1.0, point.jac_inv))
            speed = abs(params.alpha) * point.rho
            try:
                dens = density_F(params, speed, norm)
            except DomainError:
                samples.append(_nan_sample(point, params, "density-singular"))
                continue
            try:
                q = potentials.quantum_potential(params, sol, fac, float(rho), float(theta), control)
                u_pot = potentials.classical_potential(params, sol, fac, float(rho), float(theta), control)
                flag = ""
            except NodeError:
                q = math.nan
                u_pot = math.nan
                flag = "node"
            samples.append(
                FieldSample(
                    x=point.x, y=point.y, phi=point.phi_val,
                    vx=-params.alpha * point.rho * math.cos(point.theta),
                    vy=-params.alpha * point.rho * math.sin(point.theta),
                    speed=speed, density=dens, q_pot=q, u_pot=u_pot,
                    jac_inv=point.jac_inv, region=point.region, flag=flag,
                )
            )
    if len(signs) > 1:
        warnings.warn(
            "inverse Jacobian changes sign over the grid: the image is not univalent",
            UnivalenceWarning,
            stacklevel=2,
        )
    return samples


def sample_fields_radial(
    params: ModelParams,
    domain: SectorDomain,
    grid: tuple[int, int],
    norm: float = 1.0,
    control: SeriesControl = DEFAULT_SERIES,
) -> list[FieldSample]:
    """Field records for the angularly symmetric hyperbolic flow."""
    from . import potentials

    domain.require_hyperbolic(params)
    rhos, thetas = _grid(domain, grid)
    samples: list[FieldSample] = []
    for rho in rhos:
        q = potentials.quantum_potential_radial(params, float(rho))
        u_pot = potentials.classical_potential_radial(params, float(rho))
        speed = abs(params.alpha) * float(rho)
        dens = density_F(params, speed, norm)
        for theta in thetas:
            point = forward_map_radial(params, float(rho), float(theta), control)
            samples.append(
                FieldSample(
                    x=point.x, y=point.y, phi=point.phi_val,
                    vx=-params.alpha * rho * math.cos(theta),
                    vy=-params.alpha * rho * math.sin(theta),
                    speed=speed, density=dens, q_pot=q, u_pot=u_pot,
                    jac_inv=point.jac_inv, region=point.region,
                )
            )
    return samples
