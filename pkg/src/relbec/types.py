"""Scaled-unit value types shared by all modules.

Every quantity is dimensionless: temperatures, chemical potentials and
momenta are measured in units of the boson mass m, densities in units of
m^3 (natural units, hbar = c = k_B = 1). The mass itself never appears as
a runtime parameter.
"""
from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveTemperature, UnphysicalMu


@dataclass(frozen=True)
class PhasePoint:
    """A thermodynamic state (T/m, mu/m) of the uniform gas.

    |mu| = 1 is accepted: it is the condensation point, not a pathology.
    """

    t: float
    mu: float

    def __post_init__(self):
        if not (self.t > 0.0):
            raise NonPositiveTemperature(
                f"temperature must be > 0, got t = {self.t}")
        if not (abs(self.mu) <= 1.0):
            raise UnphysicalMu(
                f"|mu| <= 1 required for positive occupations, got mu = {self.mu}")


def make_phase_point(t: float, mu: float) -> PhasePoint:
    """Validated construction of a scaled phase point."""
    return PhasePoint(float(t), float(mu))


@dataclass(frozen=True)
class ChargeDensities:
    """Thermal particle density n1, antiparticle density n2 and their
    difference q_tilde, all in units of m^3.

    q_tilde is stored as n1 - n2 by construction.
    """

    n1: float
    n2: float
    q_tilde: float

    @classmethod
    def from_pair(cls, n1: float, n2: float) -> "ChargeDensities":
        return cls(n1=n1, n2=n2, q_tilde=n1 - n2)

    @property
    def ratio(self) -> float:
        """Antiparticle fraction n2/n1."""
        return self.n2 / self.n1


@dataclass(frozen=True)
class CriticalPoint:
    """One point (q/m^3, T_c/m, n2/n1 at transition) on the BEC line."""

    q: float
    t_c: float
    ratio: float


@dataclass(frozen=True)
class MomentumProfile:
    """k^2-weighted occupation curves n1(k), n2(k) on an ascending grid."""

    k_grid: np.ndarray
    n1_of_k: np.ndarray
    n2_of_k: np.ndarray

    def __post_init__(self):
        if not (len(self.k_grid) == len(self.n1_of_k) == len(self.n2_of_k)):
            raise ValueError("profile arrays must share length")


@dataclass(frozen=True)
class BoxSpec:
    """Periodic cubic box for the finite-volume mode sum.

    box_length is L*m; mode_cutoff is the largest integer mode index kept
    (the sum runs over 0 < |n| <= mode_cutoff). Whether the cutoff is
    adequate for a given phase point is checked by the mode sum itself,
    which carries an analytic tail bound.
    """

    box_length: float
    mode_cutoff: int

    def __post_init__(self):
        if not (self.box_length > 0.0):
            raise ValueError(f"box_length must be > 0, got {self.box_length}")
        if not (isinstance(self.mode_cutoff, int) and self.mode_cutoff >= 1):
            raise ValueError(
                f"mode_cutoff must be an integer >= 1, got {self.mode_cutoff}")
