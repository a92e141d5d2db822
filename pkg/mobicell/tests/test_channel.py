"""Fading, path loss and power conversion test module."""


import numpy as np
import pytest
from scipy import integrate, stats

from mobicell import channel, errors
from mobicell.testsupport.array_cmp import ArrayDiff


@pytest.fixture(params=range(3))
def rng(request):
    """Seeded random stream."""
    return np.random.default_rng(request.param)


@pytest.fixture(params=[0.5, 10 ** 0.2, 5.0], ids=lambda k: f'K={k:.3g}')
def k_factor(request):
    """Rician K-factor."""
    return request.param


def test_dbm_round_trip():
    power = channel.dbm_to_linear(45)
    assert ArrayDiff(power.dbm, 45) < 1e-12
    assert ArrayDiff(channel.linear_to_dbm(power.linear_mw), 45) < 1e-12


def test_power_level_rejects_nonpositive():
    with pytest.raises(errors.ParameterError):
        channel.PowerLevel(0)
    with pytest.raises(ValueError):
        channel.PowerLevel(-1.0)


def test_path_loss_domain():
    with pytest.raises(errors.DivergentInterferenceError):
        channel.path_loss(10.0, 2.0)
    with pytest.raises(errors.SingularityError):
        channel.path_loss([1.0, 0.0], 4)
    with pytest.raises(errors.ParameterError):
        channel.path_loss(-1.0, 4)
    assert ArrayDiff(channel.path_loss([1, 2], 4), [1, 1 / 16]) < 1e-15


def test_rayleigh_is_unit_exponential(rng):
    h = channel.sample_rayleigh_power(rng, 100000).value
    assert stats.kstest(h, 'expon').statistic < 0.01


def test_rician_mean(rng, k_factor):
    draw = channel.sample_rician_power(k_factor, rng, 1000000)
    assert draw.model == 'rician'
    assert ArrayDiff(draw.value.mean(), draw.mean()) < {'rtol': 0.01}


def test_rician_without_los_is_exponential(rng):
    h = channel.sample_rician_power(0.0, rng, 100000).value
    assert stats.kstest(h, 'expon').statistic < 0.01


def test_rician_rejects_negative_k(rng):
    with pytest.raises(errors.ParameterError):
        channel.sample_rician_power(-0.1, rng)


def test_rician_cdf_series(k_factor):
    x = np.array([0.01, 0.3, 1.0, 2.5, 7.0, 20.0])
    series = [channel.rician_power_cdf(xi, k_factor)[0] for xi in x]
    exact = stats.ncx2.cdf(2 * x, 2, 2 * k_factor)
    assert ArrayDiff(series, exact) < {'atol': 1e-9}


def test_rician_cdf_matches_samples(k_factor):
    rng = np.random.default_rng(1)
    h = channel.sample_rician_power(k_factor, rng, 20000).value
    cdf = lambda x: np.array([channel.rician_power_cdf(xi, k_factor)[0]
                              for xi in x])
    assert stats.kstest(h, cdf).statistic < 0.02


def test_rician_cdf_truncation_flag():
    value, converged = channel.rician_power_cdf(3.0, 50.0, j_max=10)
    assert not converged
    assert 0 <= value <= 1
    assert channel.rician_power_cdf(3.0, 2.0)[1]


def test_rician_pdf_normalized(k_factor):
    mass, _ = integrate.quad(channel.rician_power_pdf, 0, np.inf,
                             args=(k_factor,))
    assert ArrayDiff(mass, 1) < 1e-7


def test_rician_pdf_is_cdf_derivative(k_factor):
    x, dx = 1.7, 1e-5
    upper = channel.rician_power_cdf(x + dx, k_factor)[0]
    lower = channel.rician_power_cdf(x - dx, k_factor)[0]
    slope = (upper - lower) / (2 * dx)
    assert ArrayDiff(channel.rician_power_pdf(x, k_factor), slope) < 1e-7
