import math

import numpy as np
import pytest

from relbec import (AsymptoteOutOfRange, Dimension, UnsupportedDimension,
                    ddim_critical_temperature, density_of_states, gamma_half,
                    low_t_condensate_antiparticles, low_t_mu_asymptote,
                    ur_condensed_fraction, ur_critical_temperature,
                    ur_densities, ur_density_ratio, zeta_int)

ZETA3 = 1.2020569031595943


def test_zeta_basel():
    assert zeta_int(2) == pytest.approx(math.pi ** 2 / 6.0, rel=1e-15)


def test_zeta_three_two_series_routes():
    # cross-check the tabulated value against two independent series:
    # plain Dirichlet sum with Euler-Maclaurin tail, and the eta series
    n = 3
    big = 400
    direct = sum(j ** (-n) for j in range(1, big + 1)) \
        + big ** (1 - n) / (n - 1) - 0.5 * big ** (-n) \
        + (n / 12.0) * big ** (-n - 1)
    eta = sum((-1) ** (j + 1) * j ** (-n) for j in range(1, 20_001))
    from_eta = eta / (1.0 - 2.0 ** (1 - n))
    assert zeta_int(3) == pytest.approx(direct, abs=1e-14)
    assert zeta_int(3) == pytest.approx(from_eta, abs=1e-12)


def test_zeta_uncommon_order():
    assert zeta_int(5) == pytest.approx(1.0369277551433699, rel=1e-14)
    with pytest.raises(ValueError):
        zeta_int(1)


def test_gamma_half_values():
    assert gamma_half(1.5) == pytest.approx(math.sqrt(math.pi) / 2.0, rel=1e-15)
    assert gamma_half(1.0) == 1.0
    assert gamma_half(4.0) == 6.0
    assert gamma_half(2.5) == pytest.approx(0.75 * math.sqrt(math.pi), rel=1e-15)
    with pytest.raises(ValueError):
        gamma_half(0.3)


def test_ur_densities_symmetric():
    d = ur_densities(2.0, 0.0)
    assert d.n1 == d.n2 == pytest.approx(ZETA3 * 8.0 / math.pi ** 2, rel=1e-14)
    assert d.q_tilde == 0.0


def test_ur_charge_direct():
    assert ur_densities(1.0, 1.0).q_tilde == pytest.approx(1.0 / 3.0, rel=1e-14)


def test_ur_critical_temperature_values():
    assert ur_critical_temperature(3.0) == pytest.approx(3.0, rel=1e-15)
    assert ur_critical_temperature(1.0 / 3.0) == pytest.approx(1.0, rel=1e-15)
    assert ur_critical_temperature(100.0) == pytest.approx(17.3205080757,
                                                           rel=1e-10)


def test_ur_density_ratio_limits():
    assert ur_density_ratio(1e6) == pytest.approx(1.0, abs=1e-5)
    # the expansion's documented failure mode: ratio -> -1 as t_c -> 0
    assert ur_density_ratio(1e-4) == pytest.approx(-1.0, abs=1e-3)


def test_ur_density_ratio_one_third_point():
    # numerator/denominator = (a - b)/(a + b) with a = 2b at this t_c
    t_c = math.pi ** 2 / (3.0 * ZETA3)
    a = ZETA3 * t_c ** 3 / math.pi ** 2
    b = t_c ** 2 / 6.0
    assert a == pytest.approx(2.0 * b, rel=1e-13)
    assert ur_density_ratio(t_c) == pytest.approx(1.0 / 3.0, rel=1e-13)


def test_density_of_states_gap_edge():
    assert density_of_states(1.0, Dimension(3)) == 0.0


def test_density_of_states_reference():
    val = density_of_states(math.sqrt(2.0), Dimension(3))
    assert val == pytest.approx(math.sqrt(2.0) / (2.0 * math.pi ** 2), rel=1e-14)
    with pytest.raises(ValueError):
        density_of_states(0.5, Dimension(3))


def test_density_of_states_jacobian_identity():
    # rho(eps) deps = k^2/(2 pi^2) dk at eps = sqrt(k^2+1), d = 3
    rng = np.random.default_rng(42)
    for k in rng.uniform(0.05, 10.0, size=20):
        eps = math.sqrt(k * k + 1.0)
        jac = k / eps  # dk/deps inverse
        lhs = density_of_states(eps, Dimension(3))
        rhs = k * k / (2.0 * math.pi ** 2) / jac
        assert lhs == pytest.approx(rhs, rel=1e-12)


def test_ddim_reduces_to_ur_at_three():
    rng = np.random.default_rng(7)
    for q in rng.uniform(1e-3, 1e3, size=100):
        assert ddim_critical_temperature(q, Dimension(3)) == pytest.approx(
            ur_critical_temperature(q), rel=1e-12)


def test_ddim_four_dimensions():
    # closed form [2 pi^2 / (3 zeta(3))]^(1/3)
    expected = (2.0 * math.pi ** 2 / (3.0 * ZETA3)) ** (1.0 / 3.0)
    got = ddim_critical_temperature(1.0, Dimension(4))
    assert got == pytest.approx(expected, rel=1e-13)
    assert got == pytest.approx(1.7623594292442, rel=1e-12)


def test_dimension_two_rejected():
    with pytest.raises(UnsupportedDimension):
        Dimension(2)


def test_ur_condensed_fraction_values():
    assert ur_condensed_fraction(1.0, 1.0, Dimension(3)) == 0.0
    assert ur_condensed_fraction(0.5, 1.0, Dimension(3)) == pytest.approx(0.75)
    assert ur_condensed_fraction(0.5, 1.0, Dimension(4)) == pytest.approx(0.875)
    with pytest.raises(ValueError):
        ur_condensed_fraction(2.0, 1.0, Dimension(3))


def test_low_t_mu_asymptote():
    assert low_t_mu_asymptote(1e12, 0.1) == pytest.approx(1.0, abs=1e-10)
    assert low_t_mu_asymptote(1.0, 0.01) == pytest.approx(
        1.0 - 0.01 * math.log(2.0), rel=1e-14)


def test_low_t_condensate_antiparticles():
    assert low_t_condensate_antiparticles(1.0, 0.5) == pytest.approx(
        2.0 / (math.exp(4.0) - 2.0), rel=1e-13)
    assert low_t_condensate_antiparticles(1.0, 0.01) == pytest.approx(0.0,
                                                                      abs=1e-80)
    with pytest.raises(AsymptoteOutOfRange):
        low_t_condensate_antiparticles(0.5, 5.0)


def test_ur_convergence_to_quadrature():
    # |UR - quadrature| / quadrature shrinks monotonically with t
    from relbec import PhasePoint, thermal_charge_density
    devs = []
    for t in (10.0, 30.0, 100.0):
        q = thermal_charge_density(PhasePoint(t, 0.3)).q_tilde
        devs.append(abs(ur_densities(t, 0.3).q_tilde - q) / q)
    assert devs[0] > devs[1] > devs[2]
