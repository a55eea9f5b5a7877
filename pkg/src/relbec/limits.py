"""Closed-form limits: ultra-relativistic expansions, the d-dimensional
critical temperature, and low-temperature condensate asymptotics.

These serve both as fast paths (deep UR regime) and as independent
cross-validation targets for the quadrature and solver modules.
"""
import math
from dataclasses import dataclass

from .errors import AsymptoteOutOfRange, UnsupportedDimension
from .types import ChargeDensities

_ZETA_TABLE = {
    2: math.pi ** 2 / 6.0,
    3: 1.2020569031595943,
    4: math.pi ** 4 / 90.0,
}


def zeta_int(n: int) -> float:
    """Riemann zeta at integer n >= 2.

    Common values are tabulated; larger n use the direct series with an
    Euler-Maclaurin tail, accurate to ~1e-15.
    """
    if not (isinstance(n, int) and n >= 2):
        raise ValueError(f"zeta_int needs an integer n >= 2, got {n}")
    if n in _ZETA_TABLE:
        return _ZETA_TABLE[n]
    big_n = 400
    s = math.fsum(j ** (-float(n)) for j in range(1, big_n + 1))
    # Euler-Maclaurin tail: integral + half endpoint + first correction
    s += big_n ** (1 - n) / (n - 1) - 0.5 * big_n ** (-n) \
        + (n / 12.0) * big_n ** (-n - 1)
    return s


def gamma_half(x: float) -> float:
    """Gamma function at positive integer or half-integer x, by upward
    recursion from Gamma(1) = 1 and Gamma(1/2) = sqrt(pi)."""
    two_x = 2.0 * x
    if x <= 0.0 or two_x != round(two_x):
        raise ValueError(
            f"gamma_half needs a positive integer or half-integer, got {x}")
    if x == round(x):
        val, arg = 1.0, 1.0
    else:
        val, arg = math.sqrt(math.pi), 0.5
    while arg < x - 0.5:
        val *= arg
        arg += 1.0
    return val


@dataclass(frozen=True)
class Dimension:
    """Spatial dimension; homogeneous BEC needs d > 2."""

    d: int

    def __post_init__(self):
        if not (isinstance(self.d, int) and self.d >= 3):
            raise UnsupportedDimension(
                f"need integer spatial dimension d >= 3, got {self.d}")


def ur_densities(t: float, mu: float) -> ChargeDensities:
    """First-order-in-mu ultra-relativistic densities:
    n1,2 = zeta(3) t^3/pi^2 +- mu t^2/6, q_tilde = mu t^2/3."""
    if not (t > 0.0):
        raise ValueError(f"temperature must be > 0, got {t}")
    a = zeta_int(3) * t ** 3 / math.pi ** 2
    b = mu * t ** 2 / 6.0
    return ChargeDensities.from_pair(a + b, a - b)


def ur_critical_temperature(q_over_m: float) -> float:
    """Ultra-relativistic critical temperature sqrt(3 q/m) (Kapusta form);
    in fully scaled units T_c/m = sqrt(3 q/m^3)."""
    if not (q_over_m > 0.0):
        raise ValueError(f"q must be > 0, got {q_over_m}")
    return math.sqrt(3.0 * q_over_m)


def ur_density_ratio(t_c: float, mu: float = 1.0) -> float:
    """UR antiparticle ratio at the transition.

    Valid only deep in the UR regime; as t_c -> 0 it tends to -1, a
    documented failure of the expansion (the true ratio stays in (0, 1)).
    """
    if not (t_c > 0.0):
        raise ValueError(f"t_c must be > 0, got {t_c}")
    a = zeta_int(3) * t_c ** 3 / math.pi ** 2
    b = mu * t_c ** 2 / 6.0
    return (a - b) / (a + b)


def density_of_states(eps: float, dim: Dimension) -> float:
    """Relativistic single-particle density of states per unit volume,
    (2 pi^{d/2} / ((2 pi)^d Gamma(d/2))) eps (eps^2 - 1)^{(d-2)/2},
    for scaled energy eps >= 1."""
    if eps < 1.0:
        raise ValueError(f"energy below the mass gap: eps = {eps}")
    d = dim.d
    pref = 2.0 * math.pi ** (d / 2.0) / ((2.0 * math.pi) ** d * gamma_half(d / 2.0))
    return pref * eps * (eps * eps - 1.0) ** ((d - 2) / 2.0)


def ddim_critical_temperature(q_over_m: float, dim: Dimension) -> float:
    """UR critical temperature of the d-dimensional gas,
    [ (2 pi)^d Gamma(d/2) / (4 pi^{d/2} Gamma(d) zeta(d-1)) * q/m ]^{1/(d-1)}.

    Reduces exactly to sqrt(3 q/m) at d = 3.
    """
    if not (q_over_m > 0.0):
        raise ValueError(f"q must be > 0, got {q_over_m}")
    d = dim.d
    pref = (2.0 * math.pi) ** d * gamma_half(d / 2.0) / (
        4.0 * math.pi ** (d / 2.0) * gamma_half(float(d)) * zeta_int(d - 1))
    return (pref * q_over_m) ** (1.0 / (d - 1))


def ur_condensed_fraction(t: float, t_c: float, dim: Dimension) -> float:
    """UR condensed fraction 1 - (t/t_c)^{d-1}; an inverted parabola at d=3."""
    if not (t_c > 0.0):
        raise ValueError(f"t_c must be > 0, got {t_c}")
    if not (0.0 <= t <= t_c):
        raise ValueError(f"need 0 <= t <= t_c, got t = {t}, t_c = {t_c}")
    return 1.0 - (t / t_c) ** (dim.d - 1)


def low_t_mu_asymptote(q0_occ: float, t: float) -> float:
    """T -> 0 chemical potential at fixed condensate occupation:
    mu ~ 1 - t ln((q0+1)/q0) in scaled units."""
    if not (q0_occ > 0.0):
        raise ValueError(f"condensate occupation must be > 0, got {q0_occ}")
    if not (t > 0.0):
        raise ValueError(f"temperature must be > 0, got {t}")
    return 1.0 - t * math.log1p(1.0 / q0_occ)


def low_t_condensate_antiparticles(q0_occ: float, t: float) -> float:
    """T -> 0 condensate antiparticle occupation
    (q0+1) / (q0 (e^{2/t} - 1) - 1), implemented verbatim.

    Evaluated through e^{-2/t} so it stays finite for small t; outside the
    validity region the denominator turns non-positive and the call fails.
    """
    if not (q0_occ > 0.0):
        raise ValueError(f"condensate occupation must be > 0, got {q0_occ}")
    if not (t > 0.0):
        raise ValueError(f"temperature must be > 0, got {t}")
    x = 2.0 / t
    emx = math.exp(-x) if x < 745.0 else 0.0
    # (q0+1)/(q0 (e^x - 1) - 1) * e^{-x}/e^{-x}
    denom = q0_occ * (1.0 - emx) - emx
    if denom <= 0.0:
        raise AsymptoteOutOfRange(
            f"asymptotic formula invalid at t = {t}, q0 = {q0_occ}")
    return (q0_occ + 1.0) * emx / denom
