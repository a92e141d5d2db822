"""Dynamic resource sharing test module."""


import numpy as np
import pytest

from mobicell import drsa, errors, geometry


@pytest.fixture(params=range(3))
def seed(request):
    """Random number generator seed."""
    return request.param


@pytest.fixture
def rng(seed):
    return np.random.default_rng(seed)


@pytest.fixture
def cues(rng):
    """Distances (r_u, r_mu) of 100 CUEs, some closer to the MC."""
    r_u = rng.uniform(10, 250, 100)
    r_mu = rng.uniform(10, 500, 100)
    return np.column_stack([r_u, r_mu])


def test_backhaul_has_priority():
    assignment = drsa.assign_subchannel(True, [(50.0, 100.0)])
    assert assignment == drsa.Assignment(drsa.SHARE_WITH_BACKHAUL)


def test_relatively_closest_cue_is_selected():
    cues = [(50.0, 60.0), (80.0, 400.0), (30.0, 90.0)]
    assignment = drsa.assign_subchannel(False, cues)
    assert assignment.mode == drsa.SHARE_WITH_CUE
    assert assignment.cue_index == 1
    assert assignment.chosen_ratio == 0.2


@pytest.mark.parametrize('distances',
                         [[], [(50.0, 50.0)], [(90.0, 60.0), (40.0, 30.0)]])
def test_exclusive_access_link(distances):
    assert drsa.select_cue(distances).mode == drsa.EXCLUSIVE_AL


def test_select_cue_rejects_zero_distance():
    with pytest.raises(errors.ParameterError):
        drsa.select_cue([(50.0, 0.0)])


def test_reuse_factor():
    assert drsa.reuse_factor([0, 0, 0]).q_omega == 2
    report = drsa.reuse_factor(np.ones(7), area_bound=5e5)
    assert report.q_omega == 9
    assert report.active_senb_count == 7
    assert report.area_bound == 5e5


def test_macrocell_reuse():
    window = geometry.Window.square(10)
    senbs = [[100.0, 0.0], [0.0, 390.0], [500.0, 0.0], [-2000.0, 0.0]]
    snap = geometry.NetworkSnapshot(
        geometry.PppField(2e-6, window, [[0.0, 0.0]]),
        geometry.PppField(2e-5, window, senbs),
        (150.0, 0.0), 0, [[50.0, 0.0]], 8.0, 5.0,
    )
    # mean cell of 2e-6 per m² has a radius close to 399 m
    assert drsa.macrocell_reuse(snap, kappa=1).q_omega == 4
    assert drsa.macrocell_reuse(snap, kappa=0).q_omega == 2
    assert drsa.macrocell_reuse(snap, kappa=1, area_bound=1e8).q_omega == 6


def test_expected_reuse_factor():
    assert drsa.expected_reuse_factor(2e-5, 5e5) == pytest.approx(12)
    assert drsa.expected_reuse_factor(2e-5, 5e5, kappa=0) == 2


def test_select_cue_matches_exhaustive_search(cues):
    ratios = [r_u / r_mu for r_u, r_mu in cues]
    best = min(range(len(ratios)), key=ratios.__getitem__)
    assignment = drsa.select_cue(cues)
    assert ratios[best] < 1
    assert assignment.mode == drsa.SHARE_WITH_CUE
    assert assignment.cue_index == best
    assert assignment.chosen_ratio == ratios[best]


def test_select_cue_permutation(cues, rng):
    assignment = drsa.select_cue(cues)
    order = rng.permutation(len(cues))
    shuffled = drsa.select_cue(cues[order])
    assert shuffled.chosen_ratio == assignment.chosen_ratio
    assert order[shuffled.cue_index] == assignment.cue_index


@pytest.mark.parametrize('scale', [0.25, 8.0, 3.7])
def test_select_cue_scale_invariance(cues, scale):
    assert (drsa.select_cue(cues * scale).cue_index
            == drsa.select_cue(cues).cue_index)


def test_reuse_factor_bernoulli_flags(rng):
    flags = rng.random(1000) < 0.3
    report = drsa.reuse_factor(flags.astype(int))
    assert report.active_senb_count == np.count_nonzero(flags)
    assert report.q_omega == 2 + np.count_nonzero(flags)
    more = drsa.reuse_factor(np.concatenate([flags, np.ones(10, bool)]))
    assert more.q_omega == report.q_omega + 10
