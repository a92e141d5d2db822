"""Ergodic rate test module."""


import numpy as np
import pytest
from scipy import integrate

from mobicell import analytic, errors
from mobicell.analytic import base
from mobicell.params import SystemParams
from mobicell.testsupport.array_cmp import ArrayDiff


def test_bh_rate_ideal_sic():
    params = SystemParams(gamma=0)
    senb = 10 * (np.pi / 2) * np.sqrt(params.p_s / params.p_m)

    def coverage(t):
        theta = np.expm1(t)
        return 1 / (1 + base.rho4(theta) + senb * np.sqrt(theta))

    expected, _ = integrate.quad(coverage, 0, 200, limit=200)
    assert ArrayDiff(analytic.ergodic_rate_bh(params), expected) < 1e-6


def test_bh_rate_sic_gain():
    ideal = analytic.ergodic_rate_bh(SystemParams(gamma=0))
    none = analytic.ergodic_rate_bh(SystemParams(gamma=1))
    assert ideal.value / none.value >= 1.5


def test_bh_rate_partial_sic_beats_denser_network():
    sparse = SystemParams(gamma=0.1, lambda_m=2e-6, lambda_s=2e-5)
    dense = SystemParams(gamma=1, lambda_m=4e-6, lambda_s=4e-5)
    assert (analytic.ergodic_rate_bh(sparse).value
            > analytic.ergodic_rate_bh(dense).value)


def test_al_rate_without_los():
    params = SystemParams(k_factor=0.0)
    x0 = base.omega_kappa(params) / params.p_a

    def coverage(t):
        return np.exp(-x0 * np.sqrt(np.expm1(t)))

    expected, _ = integrate.quad(coverage, 0, 100, limit=200)
    result = analytic.ergodic_rate_al(params)
    assert ArrayDiff(result, expected) < 1e-6
    assert result.terms_used == (params.j_max, params.q_max)


def test_al_rate_penetration_ordering():
    params = SystemParams(kappa=0)
    thick = analytic.ergodic_rate_al(params.replace(epsilon=0.1))
    thin = analytic.ergodic_rate_al(params.replace(epsilon=0.8))
    assert thick.value > thin.value > 0


def test_dl_rate():
    result = analytic.ergodic_rate_dl(SystemParams())
    assert result.value > 0
    assert not result.warnings
    assert set(result.diagnostics) == {'A', 'B', 't_dl_variant'}
    assert 0 < result.diagnostics['t_dl_variant'] < result.value
    dense = analytic.ergodic_rate_dl(SystemParams(lambda_m=4e-6))
    assert dense.value < result.value


def test_dl_rate_interference_free_warning():
    params = SystemParams(lambda_m=1e-9, lambda_s=1e-8, r_mu=1e4)
    result = analytic.ergodic_rate_dl(params)
    assert np.isfinite(result.value)
    assert any('interference free' in w for w in result.warnings)


def test_rates_need_fourth_power_law():
    with pytest.raises(errors.UnsupportedExponentError):
        analytic.ergodic_rate_bh(SystemParams(alpha_i=3.5))
    with pytest.raises(errors.UnsupportedExponentError):
        analytic.ergodic_rate_al(SystemParams(alpha_i=3.5))


def test_rate_dispatch():
    params = SystemParams(gamma=0)
    assert (analytic.ergodic_rate('BH', params).value
            == analytic.evaluate('t_bh', params).value)


def test_dl_rate_nondecreasing_in_cue_distance():
    params = SystemParams(lambda_m=4e-6, lambda_s=4e-5)
    rates = [analytic.ergodic_rate_dl(params.replace(r_mu=r)).value
             for r in (60.0, 200.0, 500.0)]
    assert np.all(np.diff(rates) >= 0)


def test_dl_rate_whole_plane_variant():
    params = SystemParams(lambda_m=4e-6, lambda_s=4e-5)
    result = analytic.ergodic_rate_dl(params)
    a = np.pi * result.diagnostics['A']
    b = result.diagnostics['B']

    def coverage(t):
        threshold = np.expm1(t)
        return np.exp(-a * np.sqrt(threshold)) / (1 + b * threshold)

    expected, _ = integrate.quad(coverage, 0, 200, limit=200)
    assert ArrayDiff(result.diagnostics['t_dl_variant'], expected) < 1e-6
