"""Path loss, fading power distributions and power unit conversions."""


import numpy as np
from scipy import special

from . import errors


class PowerLevel:
    """Transmit power in linear milliwatts."""

    def __init__(self, linear_mw):
        linear_mw = float(linear_mw)
        if not linear_mw > 0:
            raise errors.ParameterError(
                f"power must be positive, got {linear_mw} mW"
            )
        self.linear_mw = linear_mw
        """Power in milliwatts."""

    @property
    def dbm(self):
        return linear_to_dbm(self)

    def __float__(self):
        return self.linear_mw

    def __eq__(self, other):
        if isinstance(other, PowerLevel):
            return self.linear_mw == other.linear_mw
        return NotImplemented

    def __hash__(self):
        return hash(self.linear_mw)

    def __repr__(self):
        return f'PowerLevel({self.linear_mw!r})'


class FadingDraw:
    """Sampled fading power gain(s) and the model they came from."""

    def __init__(self, value, model, k_factor=0.0):
        self.value = value
        """Power gain, a float or an array of independent gains."""

        self.model = model
        """Either 'rayleigh' or 'rician'."""

        self.k_factor = k_factor
        """Rician K-factor (0 for Rayleigh)."""

    def mean(self):
        """Theoretical mean of the fading power."""
        return 1.0 + self.k_factor

    def __repr__(self):
        return f'FadingDraw({self.value!r}, {self.model!r}, {self.k_factor!r})'


def dbm_to_linear(p):
    """Convert a power in dBm to a PowerLevel.

    >>> dbm_to_linear(0)
    PowerLevel(1.0)
    >>> round(dbm_to_linear(45).linear_mw, 2)
    31622.78

    """
    return PowerLevel(10 ** (p / 10))


def linear_to_dbm(power):
    """Convert a PowerLevel (or milliwatts) to dBm.

    >>> linear_to_dbm(PowerLevel(100.0))
    20.0

    """
    return 10 * np.log10(float(power)).item()


def path_loss(d, alpha):
    """Distance-dependent power gain ``d**-alpha``.

    >>> path_loss(1, 3.5)
    1.0
    >>> bool(np.isclose(path_loss(5, 4), 1.6e-3))
    True

    """
    if alpha <= 2:
        raise errors.DivergentInterferenceError(
            f"path-loss exponent must exceed 2, got {alpha}"
        )
    d = np.asarray(d, float)
    if np.any(d < 0):
        raise errors.ParameterError("distances must be nonnegative")
    if np.any(d == 0):
        raise errors.SingularityError("path loss is singular at zero distance")
    gain = d ** -alpha
    return gain.item() if gain.ndim == 0 else gain


def sample_rayleigh_power(rng, size=None):
    """Draw unit-mean exponential fading powers."""
    return FadingDraw(rng.standard_exponential(size), 'rayleigh')


def sample_rician_power(k_factor, rng, size=None):
    """Draw Rician fading powers with mean ``k_factor + 1``.

    The in-phase and quadrature scattered components have variance 1/2 and
    the line-of-sight amplitude is ``sqrt(k_factor)``.
    """
    if k_factor < 0:
        raise errors.ParameterError(
            f"Rician K-factor must be nonnegative, got {k_factor}"
        )
    scale = np.sqrt(0.5)
    a = rng.normal(0.0, scale, size)
    b = rng.normal(0.0, scale, size)
    return FadingDraw((np.sqrt(k_factor) + a) ** 2 + b ** 2, 'rician', k_factor)


def rician_power_pdf(x, k_factor):
    """Density of the Rician fading power.

    >>> bool(np.isclose(rician_power_pdf(1.0, 0.0), np.exp(-1)))
    True

    """
    x = np.asarray(x, float)
    z = 2 * np.sqrt(k_factor * x)
    # i0e(z) = exp(-z) I0(z) so the exponents combine without overflow
    pdf = special.i0e(z) * np.exp(-(np.sqrt(x) - np.sqrt(k_factor)) ** 2)
    pdf = np.where(x < 0, 0.0, pdf)
    return pdf.item() if pdf.ndim == 0 else pdf


def rician_power_cdf(x, k_factor, j_max=70):
    """Truncated series of the Rician fading power CDF.

    The series mixes regularized lower incomplete gamma functions with
    Poisson(K) weights, updated by recurrence.

    Returns
    -------
    value : float
        CDF at `x`, clamped to [0, 1].
    converged : bool
        False if the last term still exceeds 1e-12.

    >>> rician_power_cdf(0.0, 1.5)
    (0.0, True)

    """
    if x < 0:
        raise errors.ParameterError(f"x must be nonnegative, got {x}")
    if k_factor < 0:
        raise errors.ParameterError(
            f"Rician K-factor must be nonnegative, got {k_factor}"
        )
    if j_max < 1:
        raise errors.ParameterError("at least one series term is needed")

    weight = np.exp(-k_factor)
    terms = []
    for j in range(j_max + 1):
        terms.append(weight * special.gammainc(j + 1, x))
        weight *= k_factor / (j + 1)

    converged = terms[-1] <= 1e-12
    value = min(max(np.sum(terms).item(), 0.0), 1.0)
    return value, bool(converged)
