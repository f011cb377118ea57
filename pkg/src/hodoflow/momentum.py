"""Momentum-space machinery: characteristics, canonical coefficients, the
oscillator-form substitution, exact radial solutions, angular factors, and the
enumeration of parameter triples whose radial factor degenerates to a
generalized Laguerre polynomial.

Radial solutions separate as ``u(rho, theta) = R(rho) Theta(theta)``.  In the
variable ``tau = ((ell+1)/n) (rho/rho_T)^n`` the radial equation is confluent
hypergeometric, so R is a power times a Kummer M (regular branch) or Tricomi
Psi (singular branch).  An angularly symmetric exact solution exists in the
hyperbolic region built from the exponential integral.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field

from . import specfun
from .errors import (
    DomainError,
    ParameterError,
    RegionError,
    SaturationWarning,
)
from .maxwell import ModelParams, discriminant
from .specfun import DEFAULT_SERIES, SeriesControl

#: Elliptic characteristics contain artanh(sqrt(1 - rho_bar^n)), divergent as
#: rho -> 0 (strong spiral winding near the origin).  Radii below this floor
#: are clamped and flagged with :class:`SaturationWarning`.
RHO_FLOOR_REL = 1e-6

#: Power-series branches lose digits for large rho_bar^n; the mapped domains
#: never exceed rho_bar ~ 3, so the cap is generous.
RHO_BAR_N_CAP = 50.0

_REL_BAND = 1e-12  # tolerance band around rho_T for region admission


class CharacteristicKind(enum.Enum):
    HYPERBOLIC_PLUS = "h+"
    HYPERBOLIC_MINUS = "h-"
    ELLIPTIC_PLUS = "e+"
    ELLIPTIC_MINUS = "e-"

    @property
    def hyperbolic(self) -> bool:
        return self in (CharacteristicKind.HYPERBOLIC_PLUS, CharacteristicKind.HYPERBOLIC_MINUS)

    @property
    def sign(self) -> float:
        return 1.0 if self in (CharacteristicKind.HYPERBOLIC_PLUS, CharacteristicKind.ELLIPTIC_PLUS) else -1.0


def characteristic_chi(params: ModelParams, kind: CharacteristicKind, rho: float, theta: float) -> float:
    """Characteristic function chi(rho, theta) of the mixed-type equation.

    Hyperbolic kinds use ``sqrt(e) - arctan(sqrt(e))`` with ``e = rho_bar^n - 1``
    and are valid for rho >= rho_T; elliptic kinds use
    ``sqrt(1 - rho_bar^n) - artanh(...)`` for 0 < rho <= rho_T.  Both radial
    parts vanish on the sonic circle, where chi = +/- theta.
    """
    if rho <= 0.0:
        raise DomainError(f"chi requires rho > 0, got {rho}")
    rho_t = params.rho_t
    pref = 2.0 / params.n * math.sqrt(params.ell + 1.0)
    if kind.hyperbolic:
        if rho < rho_t * (1.0 - _REL_BAND):
            raise RegionError(f"hyperbolic characteristic needs rho >= rho_T, got rho = {rho}")
        t = math.sqrt(max(params.rho_bar(rho) ** params.n - 1.0, 0.0))
        radial = pref * (t - math.atan(t))
    else:
        if rho > rho_t * (1.0 + _REL_BAND):
            raise RegionError(f"elliptic characteristic needs rho <= rho_T, got rho = {rho}")
        floor = RHO_FLOOR_REL * rho_t
        if rho < floor:
            warnings.warn(
                f"rho = {rho} below the elliptic floor {floor}; value saturated at the floor",
                SaturationWarning,
                stacklevel=2,
            )
            rho = floor
        t = math.sqrt(max(1.0 - params.rho_bar(rho) ** params.n, 0.0))
        radial = pref * (t - math.atanh(t)) if t < 1.0 else -math.inf
    return radial + kind.sign * theta


def slope_rho_theta(params: ModelParams, rho: float) -> float:
    """Slope d(rho)/d(theta) along a characteristic: rho / sqrt(+-Delta).

    Returns ``math.inf`` on the sonic circle, where characteristics cross the
    circle orthogonally.
    """
    if rho <= 0.0:
        raise DomainError(f"slope requires rho > 0, got {rho}")
    delta = discriminant(params, rho)
    if delta == 0.0:
        return math.inf
    return rho / math.sqrt(abs(delta))


def canonical_kappa(params: ModelParams, rho: float, branch: str) -> float:
    """First-order coefficient of the canonical form in each region.

    ``branch`` is "elliptic" (Delta < 0) or "hyperbolic" (Delta > 0):

        kappa_e = [n(ell+1) + (n-2) Delta + 2 Delta^2] / (4 (-Delta)^(3/2))
        kappa_h = [n(ell+1) + (n-2) Delta - 2 Delta^2] / (8 Delta^(3/2))
    """
    delta = discriminant(params, rho)
    core = params.n * (params.ell + 1.0) + (params.n - 2.0) * delta
    if branch == "elliptic":
        if delta >= 0.0:
            raise RegionError(f"elliptic kappa needs Delta < 0, got Delta = {delta}")
        return (core + 2.0 * delta ** 2) / (4.0 * (-delta) ** 1.5)
    if branch == "hyperbolic":
        if delta <= 0.0:
            raise RegionError(f"hyperbolic kappa needs Delta > 0, got Delta = {delta}")
        return (core - 2.0 * delta ** 2) / (8.0 * delta ** 1.5)
    raise ParameterError(f"branch must be 'elliptic' or 'hyperbolic', got {branch!r}")


# ---------------------------------------------------------------------------
# Oscillator-form (Hill) substitution
# ---------------------------------------------------------------------------

def _beta(n: float, k: int) -> float:
    return k + 1.0 / n


def _j_recurrence(n: float, k: int, x: float, control: SeriesControl) -> float:
    """J_{n,k}(x): antiderivative of exp(beta_k x^n) / x^(kn+1), by recurrence."""
    if k == 0:
        return specfun.expint_ei(_beta(n, 0) * x ** n, control) / n
    bk, bk1 = _beta(n, k), _beta(n, k - 1)
    scaled = _j_recurrence(n, k - 1, x * (bk / bk1) ** (1.0 / n), control)
    return bk ** k / (k * bk1 ** (k - 1)) * scaled - math.exp(bk * x ** n) / (k * n * x ** (k * n))


def _i_recurrence(n: float, k: int, x: float, control: SeriesControl) -> float:
    """I_{n,k}(x): antiderivative of exp(beta_k x) / x^(k+1), by recurrence."""
    if k == 0:
        return specfun.expint_ei(_beta(n, 0) * x, control)
    bk, bk1 = _beta(n, k), _beta(n, k - 1)
    scaled = _i_recurrence(n, k - 1, x * bk / bk1, control)
    return bk ** k / (k * bk1 ** (k - 1)) * scaled - math.exp(bk * x) / (k * x ** k)


def _integer_quotient(ell: float, n: float, tol: float = 1e-9) -> int | None:
    """k >= 0 with ell = n k, if one exists within tolerance."""
    q = ell / n
    k = round(q)
    if k >= 0 and abs(q - k) <= tol:
        return int(k)
    return None


def _check_rho_bar(params: ModelParams, rho: float) -> float:
    if rho <= 0.0:
        raise DomainError(f"rho must be positive, got {rho}")
    rb = params.rho_bar(rho)
    if rb ** params.n > RHO_BAR_N_CAP:
        raise DomainError(
            f"rho_bar^n = {rb ** params.n:.3g} exceeds the series cap {RHO_BAR_N_CAP}"
        )
    return rb


def hill_substitution_zeta(
    params: ModelParams, rho: float, control: SeriesControl = DEFAULT_SERIES
) -> float:
    """Radial substitution zeta(rho) that removes the first-derivative term.

    For ell = n k the antiderivative closes through the exponential integral
    (recurrence ``_j_recurrence``); otherwise the entire power series is
    summed.  The two branches differ by an additive constant that diverges as
    ell -> n k, so only differences (or the derivative ``zeta_bar``) are
    branch-independent.
    """
    rb = _check_rho_bar(params, rho)
    n, ell = params.n, params.ell
    k = _integer_quotient(ell, n)
    if k is not None:
        val = _j_recurrence(n, k, rb, control)
    else:
        x = rb ** n
        coef = (ell + 1.0) / n
        power = 1.0  # coef^k / k!
        total = 0.0
        small = 0
        for j in range(control.max_terms):
            term = power * rb ** (n * j - ell) / (n * j - ell)
            total += term
            if abs(term) < control.rel_tol * max(abs(total), 1e-300):
                small += 1
                if small >= 3 and n * j > ell + x:  # past the series hump
                    break
            else:
                small = 0
            power *= coef / (j + 1)
        else:
            raise DomainError(f"zeta series did not converge at rho_bar = {rb}")
        val = total
    return params.c0 * params.rho_t * val


def zeta_bar(params: ModelParams, rho: float) -> float:
    """d(zeta)/d(rho) = c0 (rho_T/rho)^(ell+1) exp(((ell+1)/n) rho_bar^n)."""
    if rho <= 0.0:
        raise DomainError(f"rho must be positive, got {rho}")
    rb = params.rho_bar(rho)
    return params.c0 * rb ** (-(params.ell + 1.0)) * math.exp(params.tau(rho))


def hill_coefficient_G(params: ModelParams, lam: float, rho: float) -> float:
    """Squared variable frequency G of the oscillator form, signed by region.

    ``G = +theta^2`` for rho_bar >= 1 and ``-theta^2`` below, with
    ``theta = lam sqrt(ell+1)/(c0 rho_T) rho_bar^ell sqrt(|rho_bar^n - 1|) e^(-tau)``.
    """
    if rho <= 0.0:
        raise DomainError(f"rho must be positive, got {rho}")
    if params.c0 == 0.0:
        raise ParameterError("c0 must be nonzero for the oscillator form")
    rb = params.rho_bar(rho)
    vart = (
        lam
        * math.sqrt(params.ell + 1.0)
        / (params.c0 * params.rho_t)
        * rb ** params.ell
        * math.sqrt(abs(rb ** params.n - 1.0))
        * math.exp(-params.tau(rho))
    )
    return vart ** 2 if rb >= 1.0 else -(vart ** 2)


# ---------------------------------------------------------------------------
# Radial solutions
# ---------------------------------------------------------------------------

def nu_roots(ell: float, lam: float) -> tuple[float, float]:
    """Exponents nu(+-) = -ell/2 +- sqrt(ell^2/4 + lam^2 (ell+1)) of the radial factor."""
    disc = math.sqrt(ell * ell / 4.0 + lam * lam * (ell + 1.0))
    return -ell / 2.0 + disc, -ell / 2.0 - disc


def frobenius_roots(ell: float, lam: float) -> tuple[float, float]:
    """Indicial roots of nu^2 + nu (g0 - 1) - lam^2 g0 = 0 with g0 = ell + 1.

    Independent algebraic path kept for cross-checks against :func:`nu_roots`.
    """
    g0 = ell + 1.0
    disc = math.sqrt((g0 - 1.0) ** 2 + 4.0 * lam * lam * g0)
    return (-(g0 - 1.0) + disc) / 2.0, (-(g0 - 1.0) - disc) / 2.0


def kummer_ab(n: float, ell: float, nu: float, lam: float) -> tuple[float, float]:
    """Confluent-equation parameters a = (nu - lam^2)/n, b = (2 nu + n + ell)/n."""
    return (nu - lam * lam) / n, (2.0 * nu + n + ell) / n


class RadialKind(enum.Enum):
    KUMMER_PLUS = "kummer+"
    KUMMER_MINUS = "kummer-"
    TRICOMI_PLUS = "tricomi+"
    TRICOMI_MINUS = "tricomi-"
    HYPERBOLIC_OMEGA = "omega"
    CONSTANT = "constant"

    @property
    def kummer_based(self) -> bool:
        return self in (
            RadialKind.KUMMER_PLUS,
            RadialKind.KUMMER_MINUS,
            RadialKind.TRICOMI_PLUS,
            RadialKind.TRICOMI_MINUS,
        )

    @property
    def tricomi(self) -> bool:
        return self in (RadialKind.TRICOMI_PLUS, RadialKind.TRICOMI_MINUS)


@dataclass(frozen=True)
class LaguerreCase:
    """One (lam, k) pair whose regular radial factor is a Laguerre polynomial."""

    lam: float
    k: int
    n: float
    ell: float
    alpha_bar: float

    def __post_init__(self) -> None:
        if self.lam < 1.0 - 1e-12:
            raise ParameterError(f"Laguerre cases require lam >= 1, got {self.lam}")
        if self.k < 0:
            raise ParameterError(f"k must be non-negative, got {self.k}")
        if self.ell <= -1.0:
            raise ParameterError(f"ell must exceed -1, got {self.ell}")
        if self.alpha_bar == 0.0:
            raise ParameterError("alpha_bar = 0 is excluded")
        lam2 = self.lam ** 2
        if self.k >= 1:
            residual = self.k * self.n * self.ell - ((lam2 - self.k * self.n) ** 2 - lam2)
            scale = max(1.0, lam2 ** 2)
            if abs(residual) > 1e-9 * scale:
                raise ParameterError(f"(k, ell, lam) violate the degeneration condition: residual {residual}")
            if self.k * self.n > math.sqrt(max(lam2 * (lam2 - 1.0), 0.0)) * (1.0 + 1e-9) + 1e-12:
                raise ParameterError("k n exceeds lam sqrt(lam^2 - 1)")

    @property
    def nu_plus(self) -> float:
        return self.lam ** 2 - self.k * self.n

    @property
    def bridge_constant(self) -> float:
        """c0 in M(-k, 1+alpha_bar, z) = c0 L_k^(alpha_bar)(z)."""
        return (
            specfun.gamma(1.0 + self.k)
            * specfun.gamma(1.0 + self.alpha_bar)
            / specfun.gamma(1.0 + self.alpha_bar + self.k)
        )


@dataclass(frozen=True)
class RadialSolution:
    """Tagged choice of radial factor.

    ``scale`` multiplies the raw power-times-Kummer form; Laguerre-case
    constructions set it so the radial factor is ``(-1)^k rho_bar^nu L_k(tau)``.
    """

    kind: RadialKind
    lam: float = 0.0
    nu: float = 0.0
    a: float = 0.0
    b: float = 0.0
    scale: float = 1.0
    laguerre_case: LaguerreCase | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.lam < 0.0:
            raise ParameterError(f"lam must be non-negative, got {self.lam}")
        if self.kind.kummer_based:
            # nu must solve nu^2 + ell nu - lam^2 (ell+1) = 0 with ell from (a, b):
            # reconstruct ell = n b - 2 nu - n via the stored parameters is not
            # possible without n, so the factory methods validate instead.
            if specfun.is_nonpositive_integer(self.b) and not self.kind.tricomi:
                raise ParameterError(f"b = {self.b} is a non-positive integer; M branch undefined")
            if self.kind.tricomi and abs(self.b - round(self.b)) <= 1e-9:
                raise ParameterError(f"b = {self.b} integer; Tricomi branch not implemented")

    # -- factories ---------------------------------------------------------
    @staticmethod
    def kummer(params: ModelParams, lam: float, branch: str = "+", tricomi: bool = False) -> "RadialSolution":
        nu_p, nu_m = nu_roots(params.ell, lam)
        nu = nu_p if branch == "+" else nu_m
        a, b = kummer_ab(params.n, params.ell, nu, lam)
        if tricomi:
            kind = RadialKind.TRICOMI_PLUS if branch == "+" else RadialKind.TRICOMI_MINUS
        else:
            kind = RadialKind.KUMMER_PLUS if branch == "+" else RadialKind.KUMMER_MINUS
        _check_nu(params.ell, lam, nu)
        return RadialSolution(kind=kind, lam=lam, nu=nu, a=a, b=b)

    @staticmethod
    def from_laguerre_case(params: ModelParams, case: LaguerreCase) -> "RadialSolution":
        if abs(case.n - params.n) > 1e-12 or abs(case.ell - params.ell) > 1e-9:
            raise ParameterError("Laguerre case belongs to different (n, ell)")
        sol = RadialSolution.kummer(params, case.lam, branch="+")
        sign = -1.0 if case.k % 2 else 1.0
        return RadialSolution(
            kind=sol.kind,
            lam=sol.lam,
            nu=sol.nu,
            a=sol.a,
            b=sol.b,
            scale=sign / case.bridge_constant,
            laguerre_case=case,
        )

    @staticmethod
    def omega() -> "RadialSolution":
        return RadialSolution(kind=RadialKind.HYPERBOLIC_OMEGA, lam=0.0)

    @staticmethod
    def constant() -> "RadialSolution":
        return RadialSolution(kind=RadialKind.CONSTANT, lam=0.0)


def _check_nu(ell: float, lam: float, nu: float) -> None:
    residual = nu * nu + ell * nu - lam * lam * (ell + 1.0)
    if abs(residual) > 1e-12 * max(1.0, nu * nu, lam ** 4):
        raise ParameterError(f"nu = {nu} does not solve the indicial equation (residual {residual})")


def radial_value_slope(
    params: ModelParams,
    sol: RadialSolution,
    rho: float,
    control: SeriesControl = DEFAULT_SERIES,
) -> tuple[float, float]:
    """Radial factor R(rho) and its derivative dR/drho.

    The derivative uses the exact contiguity relations of M / Psi, not finite
    differences, so it is as accurate as the values themselves.
    """
    if rho <= 0.0:
        raise DomainError(f"rho must be positive, got {rho}")
    if sol.kind is RadialKind.CONSTANT:
        return 1.0, 0.0
    if sol.kind is RadialKind.HYPERBOLIC_OMEGA:
        return hyperbolic_omega(params, rho, control), omega_slope(params, rho)
    rb = _check_rho_bar(params, rho)
    tau = params.tau(rho)
    if sol.kind.tricomi:
        t_val = specfun.tricomi_psi(sol.a, sol.b, tau, control)
        t_der = specfun.tricomi_psi_deriv(sol.a, sol.b, tau, control)
    else:
        t_val = specfun.kummer_m(sol.a, sol.b, tau, control)
        t_der = specfun.kummer_m_deriv(sol.a, sol.b, tau, control)
    value = sol.scale * rb ** sol.nu * t_val
    slope = sol.scale * rb ** (sol.nu - 1.0) * (sol.nu * t_val + params.n * tau * t_der) / params.rho_t
    return value, slope


def radial_kummer(
    params: ModelParams,
    sol: RadialSolution,
    rho: float,
    control: SeriesControl = DEFAULT_SERIES,
) -> float:
    """Radial factor R(rho) = scale * rho_bar^nu * T(tau) for Kummer-based kinds."""
    if not sol.kind.kummer_based:
        raise ParameterError(f"radial_kummer expects a Kummer-based solution, got {sol.kind}")
    return radial_value_slope(params, sol, rho, control)[0]


def mu_plus(params: ModelParams, rho: float) -> float:
    """Radial canonical coordinate of the hyperbolic region (zero on the sonic circle)."""
    if rho < params.rho_t * (1.0 - _REL_BAND):
        raise RegionError(f"mu_plus needs rho >= rho_T, got {rho}")
    eps = max(params.rho_bar(rho) ** params.n - 1.0, 0.0)
    s = math.sqrt(eps)
    return 2.0 * math.sqrt(params.ell + 1.0) / params.n * (s - math.atan(s))


def hyperbolic_omega(
    params: ModelParams, rho: float, control: SeriesControl = DEFAULT_SERIES
) -> float:
    """Angularly symmetric exact solution in the hyperbolic region.

    ``Omega(rho) = (c1 sqrt(ell+1)/n) e^(-(ell+1)/n) [ I_{n,k}(rho_bar^n) + c2 ]``
    when ell = n k, and the entire-series analogue otherwise.  Depends on rho
    only; the angular average of any flow built on it is trivially preserved.
    """
    if rho < params.rho_t * (1.0 - _REL_BAND):
        raise RegionError(f"hyperbolic solution needs rho >= rho_T, got {rho}")
    rb = _check_rho_bar(params, rho)
    n, ell = params.n, params.ell
    x = rb ** n  # = eps_n + 1
    pref = params.c1 * math.sqrt(ell + 1.0) / n * math.exp(-(ell + 1.0) / n)
    k = _integer_quotient(ell, n)
    if k is not None:
        core = _i_recurrence(n, k, x, control)
    else:
        coef = (ell + 1.0) / n
        power = 1.0
        core = 0.0
        small = 0
        for j in range(control.max_terms):
            term = n * power * x ** (j - ell / n) / (j * n - ell)
            core += term
            if abs(term) < control.rel_tol * max(abs(core), 1e-300):
                small += 1
                if small >= 3 and j > coef * x:
                    break
            else:
                small = 0
            power *= coef / (j + 1)
        else:
            raise DomainError(f"omega series did not converge at rho_bar = {rb}")
    return pref * (core + params.c2)


def omega_slope(params: ModelParams, rho: float) -> float:
    """Exact d(Omega)/d(rho); matches zeta_bar when c1 = c0 rho_T e^((ell+1)/n)/sqrt(ell+1)."""
    if rho < params.rho_t * (1.0 - _REL_BAND):
        raise RegionError(f"hyperbolic solution needs rho >= rho_T, got {rho}")
    rb = params.rho_bar(rho)
    ell = params.ell
    return (
        params.c1
        * math.sqrt(ell + 1.0)
        / params.rho_t
        * math.exp(-(ell + 1.0) / params.n)
        * math.exp(params.tau(rho))
        * rb ** (-(ell + 1.0))
    )


def omega_matched_c1(params: ModelParams) -> float:
    """c1 that makes d(Omega)/d(rho) coincide with zeta_bar for the given c0."""
    return params.c0 * params.rho_t * math.exp((params.ell + 1.0) / params.n) / math.sqrt(params.ell + 1.0)


# ---------------------------------------------------------------------------
# Angular factor
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AngularFactor:
    """Angular factor Theta(theta): linear for lam = 0, trigonometric otherwise."""

    lam: float
    c1: float = 1.0
    c2: float = 0.0

    def __post_init__(self) -> None:
        if self.lam < 0.0:
            raise ParameterError(f"lam must be non-negative, got {self.lam}")
        if self.c1 == 0.0 and self.c2 == 0.0:
            raise ParameterError("c1 and c2 cannot both vanish")

    def value(self, theta: float) -> float:
        if self.lam == 0.0:
            return self.c1 * theta + self.c2
        return self.c1 * math.sin(self.lam * theta) + self.c2 * math.cos(self.lam * theta)

    def deriv(self, theta: float) -> float:
        if self.lam == 0.0:
            return self.c1
        return self.lam * (self.c1 * math.cos(self.lam * theta) - self.c2 * math.sin(self.lam * theta))

    def logderiv(self, theta: float, node_tol: float = 1e-12) -> float:
        """Upsilon(theta) = Theta'/Theta; NodeError on the zero set of Theta."""
        val = self.value(theta)
        scale = abs(self.c1) + abs(self.c2) + (abs(self.c1 * theta) if self.lam == 0.0 else 0.0)
        if abs(val) < node_tol * scale:
            from .errors import NodeError

            raise NodeError(f"Theta({theta}) = 0: logarithmic derivative pole")
        return self.deriv(theta) / val

    def extremum_angle(self, k: int = 0) -> float:
        """Angle theta_e with Theta'(theta_e) = 0 (lam > 0 only)."""
        if self.lam == 0.0:
            raise ParameterError("the linear angular factor has no extremum")
        theta0 = math.atan2(self.c2, self.c1)
        return (math.pi / 2.0 + math.pi * k - theta0) / self.lam


def angular_theta(fac: AngularFactor, theta: float) -> float:
    return fac.value(theta)


def angular_logderiv(fac: AngularFactor, theta: float) -> float:
    return fac.logderiv(theta)


# ---------------------------------------------------------------------------
# Laguerre-case enumeration
# ---------------------------------------------------------------------------

def _case_from_k(n: float, lam: float, k: int) -> LaguerreCase | None:
    lam2 = lam * lam
    ell = ((lam2 - k * n) ** 2 - lam2) / (k * n)
    if ell <= -1.0:
        return None
    nu = lam2 - k * n
    alpha_bar = (2.0 * nu + ell) / n
    if alpha_bar == 0.0:
        return None
    return LaguerreCase(lam=lam, k=k, n=n, ell=ell, alpha_bar=alpha_bar)


def laguerre_enumerate(
    n: float,
    lambda_set: list[float],
    ell_max: float,
    ell_for_k0: float | None = None,
) -> list[LaguerreCase]:
    """All polynomial radial cases for each lam in ``lambda_set``.

    For lam >= 1 the admissible orders are k <= lam sqrt(lam^2 - 1) / n; each
    k pins ell through the degeneration condition.  lam = 1 only admits the
    trivial k = 0 polynomial, which holds for every ell and is reported when
    ``ell_for_k0`` pins one.  Output is ordered by lam, then k.
    """
    rows: list[LaguerreCase] = []
    for lam in sorted(lambda_set):
        if lam < 1.0 - 1e-12:
            continue
        if abs(lam - 1.0) <= 1e-12 and ell_for_k0 is not None:
            rows.append(
                LaguerreCase(lam=1.0, k=0, n=n, ell=ell_for_k0, alpha_bar=(2.0 + ell_for_k0) / n)
            )
        k_cap = int(math.floor(math.sqrt(max(lam ** 2 * (lam ** 2 - 1.0), 0.0)) / n + 1e-9))
        for k in range(1, k_cap + 1):
            case = _case_from_k(n, lam, k)
            if case is not None and case.ell <= ell_max:
                rows.append(case)
    return rows


def laguerre_enumerate_for_ell(n: float, ell: float, k_max: int = 16) -> list[LaguerreCase]:
    """Polynomial cases with the distribution pair (n, ell) held fixed.

    For each order k >= 1 the degeneration condition is a quadratic in lam^2;
    only the root compatible with ``k n <= lam sqrt(lam^2 - 1)`` (and lam >= 1)
    survives.  k = 0 always contributes lam = 1.  Ordered by lam, then k.
    """
    rows: list[LaguerreCase] = [
        LaguerreCase(lam=1.0, k=0, n=n, ell=ell, alpha_bar=(2.0 + ell) / n)
    ]
    for k in range(1, k_max + 1):
        kn = k * n
        disc = 4.0 * kn * (ell + 1.0) + 1.0
        sq = math.sqrt(disc)
        for lam2 in ((2.0 * kn + 1.0 + sq) / 2.0, (2.0 * kn + 1.0 - sq) / 2.0):
            if lam2 < 1.0 - 1e-12:
                continue
            lam = math.sqrt(lam2)
            if kn > math.sqrt(max(lam2 * (lam2 - 1.0), 0.0)) * (1.0 + 1e-12) + 1e-12:
                continue
            nu = lam2 - kn
            alpha_bar = (2.0 * nu + ell) / n
            if alpha_bar == 0.0:
                continue
            residual = kn * ell - ((lam2 - kn) ** 2 - lam2)
            if abs(residual) <= 1e-9 * max(1.0, lam2 ** 2):
                rows.append(LaguerreCase(lam=lam, k=k, n=n, ell=ell, alpha_bar=alpha_bar))
    rows.sort(key=lambda c: (c.lam, c.k))
    return rows


def brute_force_orders(n: float, ell: float, lam: float, k_max: int = 200) -> list[int]:
    """Integer orders k satisfying the degeneration condition, by direct scan.

    Kept deliberately naive: it double-checks the closed-form enumeration.
    """
    lam2 = lam * lam
    hits = []
    for k in range(0, k_max + 1):
        kn = k * n
        if k == 0:
            if abs(lam2 * (lam2 - 1.0)) <= 1e-9 * max(1.0, lam2 ** 2) and lam >= 1.0 - 1e-12:
                hits.append(k)
            continue
        residual = kn * ell - ((lam2 - kn) ** 2 - lam2)
        if abs(residual) <= 1e-6 * max(1.0, lam2 ** 2) and kn <= math.sqrt(
            max(lam2 * (lam2 - 1.0), 0.0)
        ) * (1.0 + 1e-9):
            hits.append(k)
    return hits


def factorized_u(
    params: ModelParams,
    sol: RadialSolution,
    fac: AngularFactor,
    rho: float,
    theta: float,
    control: SeriesControl = DEFAULT_SERIES,
) -> float:
    """Separated solution u(rho, theta) = R(rho) Theta(theta).

    Laguerre-case radial factors already carry the alternating sign and the
    polynomial normalization, so for those ``u = (-1)^k rho_bar^nu L_k(tau) Theta``.
    """
    if abs(sol.lam - fac.lam) > 1e-12:
        raise ParameterError(f"radial lam = {sol.lam} and angular lam = {fac.lam} disagree")
    value, _ = radial_value_slope(params, sol, rho, control)
    return value * fac.value(theta)
