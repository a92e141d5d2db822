"""Dynamic resource sharing of the access-link sub-channel.

The A-MeNB gives the sub-channel used by the access link either to the
backhaul of the mobile cell, when it has data, or to the CUE that is
relatively closest to its MeNB and farthest from the mobile cell.
"""


import numpy as np

from . import errors


SHARE_WITH_BACKHAUL = 'share_with_backhaul'
SHARE_WITH_CUE = 'share_with_cue'
EXCLUSIVE_AL = 'exclusive_al'


class Assignment:
    """Outcome of the sub-channel assignment."""

    def __init__(self, mode, cue_index=None, chosen_ratio=None):
        self.mode = mode
        """One of the module-level mode constants."""

        self.cue_index = cue_index
        """Index of the selected CUE when sharing with a CUE."""

        self.chosen_ratio = chosen_ratio
        """Minimum r_u/r_mu over the candidates, if any were offered."""

    def __eq__(self, other):
        if not isinstance(other, Assignment):
            return NotImplemented
        return ((self.mode, self.cue_index, self.chosen_ratio)
                == (other.mode, other.cue_index, other.chosen_ratio))

    def __repr__(self):
        return (f'Assignment({self.mode!r}, cue_index={self.cue_index!r}, '
                f'chosen_ratio={self.chosen_ratio!r})')


class ReuseReport:
    """Number of simultaneous uses of the sub-channel in a macrocell."""

    def __init__(self, active_senb_count, area_bound=None):
        self.active_senb_count = int(active_senb_count)
        """Number of SeNBs reusing the sub-channel."""

        self.area_bound = area_bound
        """Area of the macrocell over which SeNBs were counted, if known."""

        self.q_omega = max(2, 2 + self.active_senb_count)
        """Reuse factor."""

    def __repr__(self):
        return (f'ReuseReport(q_omega={self.q_omega}, '
                f'active_senb_count={self.active_senb_count}, '
                f'area_bound={self.area_bound!r})')


def select_cue(cue_distances):
    """Pick the CUE with the smallest r_u/r_mu, provided it is below 1.

    >>> select_cue([(50, 200)])
    Assignment('share_with_cue', cue_index=0, chosen_ratio=0.25)
    >>> select_cue([(50, 40), (50, 30)]).mode
    'exclusive_al'

    """
    if len(cue_distances) == 0:
        return Assignment(EXCLUSIVE_AL)

    d = np.asarray(cue_distances, float).reshape(-1, 2)
    if np.any(d <= 0):
        raise errors.ParameterError("CUE distances must be positive")

    ratios = d[:, 0] / d[:, 1]
    best = int(np.argmin(ratios))
    ratio = float(ratios[best])
    if ratio < 1:
        return Assignment(SHARE_WITH_CUE, best, ratio)
    return Assignment(EXCLUSIVE_AL, chosen_ratio=ratio)


def assign_subchannel(backhaul_has_data, cue_distances):
    """Assign the access-link sub-channel to the backhaul or to a CUE."""
    if backhaul_has_data:
        return Assignment(SHARE_WITH_BACKHAUL)
    return select_cue(cue_distances)


def reuse_factor(senb_active_flags, area_bound=None):
    """Reuse factor of the sub-channel given the SeNB activity flags.

    >>> reuse_factor([]).q_omega
    2
    >>> reuse_factor([1, 1, 1]).q_omega
    5

    """
    return ReuseReport(np.sum(senb_active_flags, dtype=int), area_bound)


def macrocell_reuse(snap, kappa, area_bound=None):
    """Reuse factor in the macrocell of the A-MeNB of a snapshot.

    The macrocell is approximated by a disc of area `area_bound` around the
    A-MeNB, the mean cell area ``1/lambda_m`` by default.
    """
    if area_bound is None:
        area_bound = 1 / snap.menbs.density
    radius = np.sqrt(area_bound / np.pi)
    inside = snap.senbs.distances(snap.amenb_position) <= radius
    return reuse_factor(kappa * inside.astype(int), area_bound)


def expected_reuse_factor(lambda_s, area_bound, kappa=1):
    """Mean reuse factor of a macrocell of given area.

    >>> expected_reuse_factor(0.25, 40.0)
    12.0

    """
    return max(2.0, 2.0 + kappa * lambda_s * area_bound)
