"""Poisson base-station fields, node placement and the nearest-distance law."""


import logging

import numpy as np

from . import errors


logger = logging.getLogger(__name__)


MAX_SNAPSHOT_ATTEMPTS = 8
"""Resampling attempts before giving up on an empty MeNB field."""


class Window:
    """Axis-aligned rectangular observation window, in meters."""

    def __init__(self, x0, y0, x1, y1):
        if not (x1 > x0 and y1 > y0):
            raise errors.ParameterError("degenerate simulation window")
        self.bounds = (float(x0), float(y0), float(x1), float(y1))
        """Lower-left and upper-right corners."""

    @classmethod
    def square(cls, width_km, height_km=None):
        """Window centered on the origin with sides given in kilometers.

        >>> Window.square(40).area
        1600000000.0

        """
        if height_km is None:
            height_km = width_km
        w = 500.0 * width_km
        h = 500.0 * height_km
        return cls(-w, -h, w, h)

    @property
    def area(self):
        x0, y0, x1, y1 = self.bounds
        return (x1 - x0) * (y1 - y0)

    @property
    def center(self):
        x0, y0, x1, y1 = self.bounds
        return np.array([(x0 + x1) / 2, (y0 + y1) / 2])

    def contains(self, points):
        """Whether each point lies inside the window (boundary included)."""
        points = np.asarray(points, float)
        x0, y0, x1, y1 = self.bounds
        x = points[..., 0]
        y = points[..., 1]
        return (x >= x0) & (x <= x1) & (y >= y0) & (y <= y1)

    def clip(self, points):
        x0, y0, x1, y1 = self.bounds
        return np.clip(points, [x0, y0], [x1, y1])

    def __repr__(self):
        return 'Window({}, {}, {}, {})'.format(*self.bounds)


class PppField:
    """Realization of a homogeneous Poisson point process on a window."""

    def __init__(self, density, window, points):
        self.density = density
        """Intensity, in points per square meter."""

        self.window = window
        """Observation window."""

        self.points = np.asarray(points, float).reshape(-1, 2)
        """Point coordinates, one row per point."""

    def __len__(self):
        return len(self.points)

    def distances(self, position):
        """Distances from a position to every point of the field."""
        return np.hypot(*(self.points - position).T)


def sample_ppp(density, window, rng):
    """Sample a homogeneous Poisson point process on a window."""
    if not density > 0:
        raise errors.ParameterError(f"density must be positive, got {density}")
    if not window.area > 0:
        raise errors.ParameterError("window area must be positive")

    count = rng.poisson(density * window.area)
    x0, y0, x1, y1 = window.bounds
    points = rng.uniform([x0, y0], [x1, y1], size=(count, 2))
    return PppField(density, window, points)


def nearest_distance_pdf(d, density):
    """Density of the distance to the nearest point of a PPP.

    >>> nearest_distance_pdf(0.0, 2e-6)
    0.0

    """
    d = np.asarray(d, float)
    if np.any(d < 0):
        raise errors.ParameterError("distance must be nonnegative")
    if not density > 0:
        raise errors.ParameterError(f"density must be positive, got {density}")
    pdf = 2 * np.pi * density * d * np.exp(-density * np.pi * d ** 2)
    return pdf.item() if pdf.ndim == 0 else pdf


def nearest_distance_cdf(d, density):
    """CDF of the distance to the nearest point of a PPP."""
    d = np.asarray(d, float)
    cdf = -np.expm1(-density * np.pi * np.maximum(d, 0) ** 2)
    return cdf.item() if cdf.ndim == 0 else cdf


def sample_nearest_distance(density, rng, size=None):
    """Sample nearest-point distances by inverting their CDF."""
    if not density > 0:
        raise errors.ParameterError(f"density must be positive, got {density}")
    u = 1.0 - rng.random(size)
    return np.sqrt(-np.log(u) / (np.pi * density))


class NetworkSnapshot:
    """One realization of the network around a mobile cell."""

    def __init__(self, menbs, senbs, mc_position, amenb_index, cues,
                 mue_offset, r_am):
        self.menbs = menbs
        """MeNB field."""

        self.senbs = senbs
        """SeNB field."""

        self.mc_position = np.asarray(mc_position, float)
        """Position of the mobile cell."""

        self.amenb_index = amenb_index
        """Index of the MeNB nearest to the mobile cell (A-MeNB)."""

        self.cues = np.asarray(cues, float).reshape(-1, 2)
        """Positions of the cellular users, one row each."""

        self.mue_offset = mue_offset
        """Distance between the access-link antenna and the MUE."""

        self.r_am = r_am
        """Separation between the backhaul and access-link antennas."""

    @property
    def amenb_position(self):
        return self.menbs.points[self.amenb_index]

    @property
    def r_m(self):
        """Distance between the A-MeNB and the mobile cell."""
        return float(np.hypot(*(self.mc_position - self.amenb_position)))

    def cue_distances(self):
        """List of (r_u, r_mu) pairs, one per CUE."""
        r_u = np.hypot(*(self.cues - self.amenb_position).T)
        r_mu = np.hypot(*(self.cues - self.mc_position).T)
        return list(zip(r_u.tolist(), r_mu.tolist()))

    def __eq__(self, other):
        if not isinstance(other, NetworkSnapshot):
            return NotImplemented
        return (np.array_equal(self.menbs.points, other.menbs.points)
                and np.array_equal(self.senbs.points, other.senbs.points)
                and np.array_equal(self.mc_position, other.mc_position)
                and self.amenb_index == other.amenb_index
                and np.array_equal(self.cues, other.cues)
                and self.mue_offset == other.mue_offset
                and self.r_am == other.r_am)


def place_cue(amenb, mc, r_u, r_mu, rng):
    """Place a CUE at `r_u` from the A-MeNB and, if possible, `r_mu` from the MC.

    The angle at the A-MeNB follows from the law of cosines; when no triangle
    with these sides exists the angle is uniform.
    """
    offset = mc - amenb
    r_m = np.hypot(*offset)
    base = np.arctan2(offset[1], offset[0])
    if r_m > 0 and abs(r_m - r_u) <= r_mu <= r_m + r_u:
        cos_phi = (r_m ** 2 + r_u ** 2 - r_mu ** 2) / (2 * r_m * r_u)
        phi = np.arccos(np.clip(cos_phi, -1, 1)) * rng.choice([-1, 1])
    else:
        phi = rng.uniform(-np.pi, np.pi)
    angle = base + phi
    return amenb + r_u * np.array([np.cos(angle), np.sin(angle)])


def build_snapshot(params, rng, window=None, sampler=sample_ppp):
    """Sample a network realization around a mobile cell at the window center.

    Parameters
    ----------
    params : SystemParams
        System parameters.
    rng : numpy.random.Generator
        Random stream.
    window : Window, optional
        Observation window, 40 km x 40 km by default.
    sampler : callable, optional
        Point process sampler with the signature of `sample_ppp`.

    """
    if window is None:
        window = Window.square(40)
    mc = window.center

    for attempt in range(MAX_SNAPSHOT_ATTEMPTS):
        menbs = sampler(params.lambda_m, window, rng)
        if len(menbs):
            break
        logger.debug("empty MeNB field, attempt %d", attempt + 1)
    else:
        raise errors.SnapshotError(
            f"no MeNB sampled after {MAX_SNAPSHOT_ATTEMPTS} attempts"
        )
    senbs = sampler(params.lambda_s, window, rng)

    amenb_index = int(np.argmin(menbs.distances(mc)))
    amenb = menbs.points[amenb_index]

    cues = [place_cue(amenb, mc, params.r_u, params.r_mu, rng)]
    for _ in range(params.n_cues - 1):
        radius = params.cue_radius * np.sqrt(rng.random())
        angle = rng.uniform(-np.pi, np.pi)
        cues.append(amenb + radius * np.array([np.cos(angle), np.sin(angle)]))
    cues = window.clip(np.array(cues))

    if params.mue_placement == 'edge':
        mue_offset = params.r_av_max
    else:
        mue_offset = params.r_av_max * (1.0 - rng.random())

    return NetworkSnapshot(menbs, senbs, mc, amenb_index, cues,
                           mue_offset, params.r_am)
