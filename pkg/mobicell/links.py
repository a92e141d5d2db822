"""Per-snapshot SIR of the backhaul, cellular downlink and access links.

Noise is neglected. Every call draws fresh fading for the useful signal and
for each interferer, always in the same order and number, so that two calls
with equally seeded streams share their fading whatever the parameters.
Interference terms are stored already weighted by the factors (κ, γ, ε) that
multiply them in the SIR denominator.
"""


import numpy as np

from . import channel


class LinkSample:
    """SIR of one link in one snapshot, with its interference terms."""

    def __init__(self, link, signal, i_m, i_s, i_a, floored=0):
        self.link = link
        """Link name: 'BH', 'DL' or 'AL'."""

        self.signal = signal
        """Received useful power."""

        self.i_m = i_m
        """Aggregate MeNB interference."""

        self.i_s = i_s
        """Aggregate SeNB interference."""

        self.i_a = i_a
        """Interference of the access-link antenna."""

        self.floored = floored
        """Number of interferer distances raised to the minimum distance."""

        interference = i_m + i_s + i_a
        self.sir = signal / interference if interference > 0 else np.inf
        """Signal-to-interference ratio, infinite without interference."""

    def success(self, theta):
        return self.sir > theta

    def rate(self):
        """Spectral efficiency ln(1 + SIR) in nats/s/Hz, NaN if unbounded."""
        return np.log1p(self.sir) if np.isfinite(self.sir) else np.nan

    def __repr__(self):
        return (f'LinkSample({self.link!r}, sir={self.sir!r}, '
                f'signal={self.signal!r}, i_m={self.i_m!r}, '
                f'i_s={self.i_s!r}, i_a={self.i_a!r})')


def _field_interference(distances, power, alpha, fading, floor):
    floored = int(np.count_nonzero(distances < floor))
    gains = np.maximum(distances, floor) ** -alpha
    return float(power * np.sum(gains * fading)), floored


def sir_backhaul(snap, params, rng):
    """SIR at the backhaul antenna of the mobile cell."""
    mc = snap.mc_position
    r_m = snap.r_m

    h = channel.sample_rayleigh_power(rng).value
    h_m = channel.sample_rayleigh_power(rng, len(snap.menbs)).value
    h_s = channel.sample_rayleigh_power(rng, len(snap.senbs)).value
    h_a = channel.sample_rayleigh_power(rng).value

    signal = params.p_m * channel.path_loss(r_m, params.alpha_i) * h

    # The serving MeNB is not an interferer
    h_m[snap.amenb_index] = 0.0
    i_m, n_m = _field_interference(snap.menbs.distances(mc), params.p_m,
                                   params.alpha_i, h_m, params.min_distance)
    i_s, n_s = _field_interference(snap.senbs.distances(mc), params.p_s,
                                   params.alpha_i, h_s, params.min_distance)
    i_a = params.p_a * channel.path_loss(snap.r_am, params.alpha_i) * h_a

    return LinkSample('BH', signal, i_m, params.kappa * i_s,
                      params.gamma * params.epsilon * i_a, n_m + n_s)


def sir_cellular_dl(snap, params, rng, cue_index=0):
    """SIR of the CUE sharing the sub-channel with the access link."""
    cue = snap.cues[cue_index]
    r_u = np.hypot(*(cue - snap.amenb_position))
    r_mu = np.hypot(*(cue - snap.mc_position))

    h = channel.sample_rayleigh_power(rng).value
    h_m = channel.sample_rayleigh_power(rng, len(snap.menbs)).value
    h_s = channel.sample_rayleigh_power(rng, len(snap.senbs)).value
    h_a = channel.sample_rayleigh_power(rng).value

    signal = params.p_m * channel.path_loss(r_u, params.alpha_i) * h

    h_m[snap.amenb_index] = 0.0
    i_m, n_m = _field_interference(snap.menbs.distances(cue), params.p_m,
                                   params.alpha_i, h_m, params.min_distance)
    i_s, n_s = _field_interference(snap.senbs.distances(cue), params.p_s,
                                   params.alpha_i, h_s, params.min_distance)
    i_a = params.p_a * channel.path_loss(r_mu, params.alpha_i) * h_a

    return LinkSample('DL', signal, i_m, params.kappa * i_s,
                      params.epsilon * i_a, n_m + n_s)


def sir_access_link(snap, params, rng, amenb_active=True):
    """SIR of the in-vehicle user served by the access-link antenna.

    The cellular interference is seen through the vehicle body and includes
    the A-MeNB unless it leaves the sub-channel to the access link alone.
    """
    mc = snap.mc_position

    h = channel.sample_rician_power(params.k_factor, rng).value
    h_m = channel.sample_rayleigh_power(rng, len(snap.menbs)).value
    h_s = channel.sample_rayleigh_power(rng, len(snap.senbs)).value

    signal = params.p_a * channel.path_loss(snap.mue_offset, params.alpha_o) * h

    if not amenb_active:
        h_m[snap.amenb_index] = 0.0
    i_m, n_m = _field_interference(snap.menbs.distances(mc), params.p_m,
                                   params.alpha_i, h_m, params.min_distance)
    i_s, n_s = _field_interference(snap.senbs.distances(mc), params.p_s,
                                   params.alpha_i, h_s, params.min_distance)

    eps = params.epsilon
    return LinkSample('AL', signal, eps * i_m, eps * params.kappa * i_s, 0.0,
                      n_m + n_s)
