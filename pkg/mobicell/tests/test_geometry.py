"""Point process and snapshot construction test module."""


import numpy as np
import pytest
from scipy import stats

from mobicell import errors, geometry
from mobicell.params import SystemParams
from mobicell.testsupport.array_cmp import ArrayDiff


@pytest.fixture(params=range(3))
def seed(request):
    """Random number generator seed."""
    return request.param


@pytest.fixture
def rng(seed):
    return np.random.default_rng(seed)


@pytest.fixture
def window():
    """Small 10 km x 10 km simulation window."""
    return geometry.Window.square(10)


def fixed_sampler(fields):
    """Point process sampler returning predefined points per density."""
    def sampler(density, window, rng):
        return geometry.PppField(density, window, fields[density])
    return sampler


def test_window():
    w = geometry.Window.square(2, 1)
    assert w.area == 2e6
    assert ArrayDiff(w.center, [0, 0]) < 1e-12
    assert list(w.contains([[0, 0], [1000, 0], [1001, 0]])) == [True, True, False]
    with pytest.raises(errors.ParameterError):
        geometry.Window(0, 0, 0, 1)


def test_ppp_mean_count(window):
    rng = np.random.default_rng(0)
    counts = [len(geometry.sample_ppp(2e-6, window, rng)) for i in range(400)]
    assert ArrayDiff(np.mean(counts), 200) < {'atol': 3}
    field = geometry.sample_ppp(2e-6, window, rng)
    assert np.all(window.contains(field.points))


def test_ppp_rejects_bad_density(window, rng):
    with pytest.raises(errors.ParameterError):
        geometry.sample_ppp(0.0, window, rng)


def test_nearest_distance_sampler(rng):
    d = geometry.sample_nearest_distance(2e-6, rng, 100000)
    cdf = lambda x: geometry.nearest_distance_cdf(x, 2e-6)
    assert stats.kstest(d, cdf).statistic < 0.01


def test_nearest_distance_pdf_matches_cdf():
    d = np.linspace(10, 2000, 9)
    dd = 1e-3
    slope = (geometry.nearest_distance_cdf(d + dd, 4e-6)
             - geometry.nearest_distance_cdf(d - dd, 4e-6)) / (2 * dd)
    assert ArrayDiff(geometry.nearest_distance_pdf(d, 4e-6), slope) < 1e-9
    with pytest.raises(errors.ParameterError):
        geometry.nearest_distance_pdf(-1.0, 4e-6)


def test_serving_distance_law(window):
    params = SystemParams()
    r_m = [geometry.build_snapshot(params, np.random.default_rng(i), window).r_m
           for i in range(1500)]
    cdf = lambda x: geometry.nearest_distance_cdf(x, params.lambda_m)
    assert stats.kstest(r_m, cdf).pvalue > 1e-4


def test_snapshot_is_reproducible(seed, window):
    params = SystemParams()
    a = geometry.build_snapshot(params, np.random.default_rng(seed), window)
    b = geometry.build_snapshot(params, np.random.default_rng(seed), window)
    assert a == b
    c = geometry.build_snapshot(params, np.random.default_rng(seed + 10), window)
    assert not a == c


def test_snapshot_retries_empty_field(window, rng):
    sampler = fixed_sampler({2e-6: np.empty((0, 2)), 2e-5: np.empty((0, 2))})
    with pytest.raises(errors.SnapshotError):
        geometry.build_snapshot(SystemParams(), rng, window, sampler)


@pytest.mark.parametrize('r_mu', [80.0, 100.0, 150.0])
def test_cue_placement(rng, window, r_mu):
    sampler = fixed_sampler({2e-6: [[120.0, 0.0], [3000.0, 0.0]],
                             2e-5: [[400.0, 400.0]]})
    params = SystemParams(r_mu=r_mu)
    snap = geometry.build_snapshot(params, rng, window, sampler)
    assert snap.amenb_index == 0
    assert snap.r_m == 120
    assert ArrayDiff(snap.cue_distances(), [(50, r_mu)]) < 1e-9


def test_cue_placement_infeasible(rng):
    amenb = np.array([500.0, 0.0])
    mc = np.zeros(2)
    cue = geometry.place_cue(amenb, mc, 50.0, 100.0, rng)
    assert ArrayDiff(np.hypot(*(cue - amenb)), 50) < 1e-9


def test_extra_cues(rng, window):
    params = SystemParams(n_cues=5)
    snap = geometry.build_snapshot(params, rng, window)
    r_u = np.array(snap.cue_distances())[:, 0]
    assert len(r_u) == 5
    assert np.all(r_u[1:] <= params.cue_radius)


def test_mue_placement(rng, window):
    edge = geometry.build_snapshot(SystemParams(mue_placement='edge'),
                                   rng, window)
    assert edge.mue_offset == 8
    offsets = [
        geometry.build_snapshot(SystemParams(), rng, window).mue_offset
        for i in range(50)
    ]
    assert 0 < min(offsets) and max(offsets) <= 8
