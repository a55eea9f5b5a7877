"""Semi-infinite quadrature for the charge-density integrand family.

Strategy: adaptive Gauss-Kronrod (G7/K15) refinement on a finite interval
[0, k_cut], with k_cut pushed out until a closed-form exponential tail
bound drops below the absolute tolerance. The integrands decay like
e^{-k/t} for k >> max(1, t), so the tail of |f| is bounded by
|f(k_cut)| (k/k_cut)^2 e^{-(k - k_cut)/s} integrated in closed form
(an incomplete-Gamma of order 3).
"""
import heapq
import math
from dataclasses import dataclass

import numpy as np

from .errors import NonConvergence
from .statistics import _weighted_occupations, charge_integrand
from .types import ChargeDensities, PhasePoint

# K15 nodes on [-1, 1] (positive half; symmetric) and weights; the G7
# subset sits at the odd indices.
_XK = np.array([
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0,
])
_WK = np.array([
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
])
_WG = np.array([
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
])

_NODES = np.concatenate([-_XK[:-1], _XK[::-1]])  # ascending, 15 nodes


def _panel(f, a, b):
    """Kronrod value, Gauss value and error estimate on [a, b]."""
    h = 0.5 * (b - a)
    c = 0.5 * (a + b)
    y = f(c + h * _NODES)
    # fold symmetric nodes: y_fold[i] pairs node -x_i with +x_i, ordered
    # by descending |x| to match the weight tables
    y = np.asarray(y, dtype=float)
    fold = y[:7] + y[8:][::-1]
    kron = h * (np.dot(fold, _WK[:7]) + _WK[7] * y[7])
    gauss = h * (np.dot(fold[1::2], _WG[:3]) + _WG[3] * y[7])
    err = abs(kron - gauss)
    # QUADPACK-style sharpening of the raw difference
    if err > 0.0:
        resabs = h * (np.dot(np.abs(fold), _WK[:7]) + _WK[7] * abs(y[7]))
        if resabs > 0.0:
            err = resabs * min(1.0, (200.0 * err / resabs) ** 1.5)
    return kron, err


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and refinement budget for the adaptive scheme."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_subdivisions: int = 60

    def __post_init__(self):
        if not (self.rel_tol > 0.0 and self.abs_tol > 0.0):
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


def _tail_bound(f, k_cut: float, decay_scale: float) -> float:
    """Closed-form bound on |integral over [k_cut, inf)| for integrands
    dominated by (k/k_cut)^2 e^{-(k-k_cut)/s} times |f(k_cut)|."""
    fk = abs(float(np.asarray(f(np.array([k_cut])))[0]))
    s = decay_scale
    r = s / k_cut
    return fk * s * (1.0 + 2.0 * r + 2.0 * r * r)


def integrate_semi_infinite(f, config: QuadratureConfig,
                            k_cut: float | None = None,
                            decay_scale: float = 1.0):
    """Integrate f over [0, inf); returns (value, error_estimate).

    f must accept an ndarray of abscissas and decay at least like
    e^{-k/decay_scale} beyond k_cut. k_cut defaults to
    max(10*decay_scale, 10) and is doubled until the analytic tail bound
    falls below abs_tol.
    """
    if k_cut is None:
        k_cut = max(10.0 * decay_scale, 10.0)
    tail = _tail_bound(f, k_cut, decay_scale)
    doublings = 0
    while tail > config.abs_tol:
        k_cut *= 2.0
        doublings += 1
        if doublings > 60:
            raise NonConvergence(
                "tail bound not below abs_tol after 60 cutoff doublings")
        tail = _tail_bound(f, k_cut, decay_scale)

    # initial uniform panels; adaptivity resolves any sharp k -> 0 structure
    n0 = 8
    edges = np.linspace(0.0, k_cut, n0 + 1)
    heap = []  # (-error, left, right, value, error, depth)
    for a, b in zip(edges[:-1], edges[1:]):
        v, e = _panel(f, a, b)
        heapq.heappush(heap, (-e, a, b, v, e, 0))

    def totals():
        val = math.fsum(item[3] for item in sorted(heap, key=lambda it: it[1]))
        err = math.fsum(item[4] for item in heap)
        return val, err

    value, err_sum = totals()
    while err_sum + tail > config.rel_tol * abs(value) + config.abs_tol:
        neg_e, a, b, v, e, depth = heapq.heappop(heap)
        if depth >= config.max_subdivisions or len(heap) > 4000:
            raise NonConvergence(
                f"quadrature error {err_sum + tail:.3e} above tolerance with "
                f"refinement budget exhausted on [{a:.6g}, {b:.6g}]")
        m = 0.5 * (a + b)
        vl, el = _panel(f, a, m)
        vr, er = _panel(f, m, b)
        heapq.heappush(heap, (-el, a, m, vl, el, depth + 1))
        heapq.heappush(heap, (-er, m, b, vr, er, depth + 1))
        value, err_sum = totals()

    # deterministic final summation over panels sorted by left edge
    return value, err_sum + tail


_MEASURE = 1.0 / (2.0 * math.pi ** 2)


def thermal_charge_density(phase: PhasePoint,
                           config: QuadratureConfig = QuadratureConfig()
                           ) -> ChargeDensities:
    """Thermal densities n1, n2 and q_tilde = n1 - n2 at a phase point.

    n1 and n2 come from independent integrations; q_tilde is additionally
    integrated as a single difference integrand, and the two routes must
    agree within 10 * rel_tol (relative to the density scale), which
    guards against systematic refinement bugs.
    """
    t = phase.t
    k_cut = max(10.0 * t, 10.0)

    def f1(k):
        return _weighted_occupations(k, phase)[0]

    def f2(k):
        return _weighted_occupations(k, phase)[1]

    def fd(k):
        return charge_integrand(k, phase)

    i1, _ = integrate_semi_infinite(f1, config, k_cut=k_cut, decay_scale=t)
    i2, _ = integrate_semi_infinite(f2, config, k_cut=k_cut, decay_scale=t)
    idiff, _ = integrate_semi_infinite(fd, config, k_cut=k_cut, decay_scale=t)

    n1 = _MEASURE * i1
    n2 = _MEASURE * i2
    q_diff = _MEASURE * idiff
    scale = max(abs(n1) + abs(n2), abs(q_diff))
    if abs((n1 - n2) - q_diff) > 10.0 * (config.rel_tol * scale + config.abs_tol):
        raise NonConvergence(
            f"difference-integrand route {q_diff:.12e} disagrees with "
            f"n1 - n2 = {n1 - n2:.12e} beyond 10*rel_tol")
    return ChargeDensities.from_pair(n1, n2)
