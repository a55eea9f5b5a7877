"""Pointwise kernels: dispersions, Bose-Einstein occupations and the
charge-density integrand, all at a single scaled momentum.

Particles carry energy omega = sqrt(k^2+1) - mu, antiparticles
omega_bar = sqrt(k^2+1) + mu. The gap omega is evaluated through the
cancellation-free form (1 - mu) + k^2/(sqrt(k^2+1) + 1), which stays
accurate as mu -> 1 and k -> 0.
"""
import math
from dataclasses import dataclass

import numpy as np

from .errors import GaplessMode
from .types import MomentumProfile, PhasePoint

# Beyond this exponent expm1 overflows; occupation is then e^{-x} exactly
# to double precision.
_OVERFLOW_X = 700.0
# Below this exponent e^x - 1 loses digits; switch to the Laurent series
# 1/x - 1/2 + x/12.
_SERIES_X = 1e-8


@dataclass(frozen=True)
class DispersionPair:
    """Particle and antiparticle energies at one momentum."""

    omega: float
    omega_bar: float


def dispersions(k: float, mu: float) -> DispersionPair:
    """Energies of the particle and antiparticle branches at momentum k."""
    e = math.sqrt(k * k + 1.0)
    gap = k * k / (e + 1.0)  # e - 1 without cancellation
    return DispersionPair(omega=gap + (1.0 - mu), omega_bar=gap + (1.0 + mu))


def occupation(energy: float, t: float) -> float:
    """Bose-Einstein occupation 1/(e^{energy/t} - 1).

    energy = 0 is rejected: the divergent zero mode is the condensate and
    must be accounted for separately.
    """
    if energy == 0.0:
        raise GaplessMode("zero-energy mode: handle the condensate separately")
    x = energy / t
    if x > _OVERFLOW_X:
        return math.exp(-x)
    if abs(x) < _SERIES_X:
        return 1.0 / x - 0.5 + x / 12.0
    return 1.0 / math.expm1(x)


def _occupation_array(energy: np.ndarray, t: float) -> np.ndarray:
    """Vectorized occupation for strictly positive energies."""
    x = np.asarray(energy, dtype=float) / t
    out = np.empty_like(x)
    small = x < _SERIES_X
    big = x > _OVERFLOW_X
    mid = ~(small | big)
    out[mid] = 1.0 / np.expm1(x[mid])
    xs = x[small]
    out[small] = 1.0 / xs - 0.5 + xs / 12.0
    out[big] = np.exp(-x[big])
    return out


def charge_integrand(k, phase: PhasePoint):
    """k^2 [n1(k) - n2(k)], the integrand of the thermal charge density.

    Accepts a scalar or an ndarray of momenta. At k = 0 with mu = +-1 the
    particle branch has the finite limit k^2 * occ -> 2t, so the integrand
    tends to +-2t rather than 0*inf.
    """
    k = np.asarray(k, dtype=float)
    e = np.sqrt(k * k + 1.0)
    gap = k * k / (e + 1.0)
    t, mu = phase.t, phase.mu
    out = np.zeros_like(k)
    nz = k != 0.0
    w1 = gap[nz] + (1.0 - mu)
    w2 = gap[nz] + (1.0 + mu)
    ksq = k[nz] ** 2
    out[nz] = ksq * (_occupation_array(w1, t) - _occupation_array(w2, t))
    if np.any(~nz):
        if mu == 1.0:
            out[~nz] = 2.0 * t
        elif mu == -1.0:
            out[~nz] = -2.0 * t
    return out if out.ndim else float(out)


def _weighted_occupations(k: np.ndarray, phase: PhasePoint):
    """k^2 n1(k) and k^2 n2(k) on an array of momenta, with the k = 0
    condensation-point limits filled in."""
    k = np.asarray(k, dtype=float)
    e = np.sqrt(k * k + 1.0)
    gap = k * k / (e + 1.0)
    t, mu = phase.t, phase.mu
    n1 = np.zeros_like(k)
    n2 = np.zeros_like(k)
    nz = k != 0.0
    ksq = k[nz] ** 2
    n1[nz] = ksq * _occupation_array(gap[nz] + (1.0 - mu), t)
    n2[nz] = ksq * _occupation_array(gap[nz] + (1.0 + mu), t)
    if np.any(~nz):
        if mu == 1.0:
            n1[~nz] = 2.0 * t
        elif mu == -1.0:
            n2[~nz] = 2.0 * t
    return n1, n2


def momentum_profile(phase: PhasePoint, k_max: float, samples: int) -> MomentumProfile:
    """Sampled k^2-weighted occupation profiles on a uniform grid [0, k_max].

    The difference of the two curves integrates (with the 1/2pi^2 measure)
    to the thermal charge density. No 1/2pi^2 prefactor is applied to the
    emitted curves.
    """
    if not (k_max > 0.0):
        raise ValueError(f"k_max must be > 0, got {k_max}")
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    k = np.linspace(0.0, k_max, samples)
    n1, n2 = _weighted_occupations(k, phase)
    return MomentumProfile(k_grid=k, n1_of_k=n1, n2_of_k=n2)
