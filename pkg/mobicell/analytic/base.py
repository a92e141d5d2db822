"""Results, quadrature and kernel functions shared by the analytic evaluators."""


import logging

import numpy as np
from scipy import integrate

from .. import errors
from ..params import QuadratureSpec


logger = logging.getLogger(__name__)


PROBABILITY_SLACK = 1e-6
"""Deviation outside [0, 1] tolerated before clamping a probability."""


class AnalyticResult:
    """Value of an analytic expression with its numerical diagnostics."""

    def __init__(self, value, est_error=0.0, terms_used=None, warnings=(),
                 diagnostics=None):
        self.value = value
        """Probability or rate in nats/s/Hz."""

        self.est_error = est_error
        """Estimated absolute error of the quadrature."""

        self.terms_used = terms_used
        """Highest (j, q) indices with non-negligible series terms."""

        self.warnings = list(warnings)
        """Human readable notes on accuracy problems."""

        self.diagnostics = {} if diagnostics is None else dict(diagnostics)
        """Internal kernel values of the expression."""

    def __float__(self):
        return float(self.value)

    def __repr__(self):
        return (f'AnalyticResult({self.value!r}, est_error={self.est_error!r}, '
                f'terms_used={self.terms_used!r}, warnings={self.warnings!r})')


def as_quad(quad):
    return QuadratureSpec() if quad is None else quad


def quadrature(f, a, b, quad):
    """Adaptive quadrature of `f` on [a, b].

    Returns
    -------
    value : float
    est_error : float
    messages : list of str
        Quadrature warnings, empty on clean convergence.

    """
    out = integrate.quad(f, a, b, epsabs=quad.abs_tol, epsrel=quad.rel_tol,
                         limit=quad.max_subdivisions, full_output=1)
    value, est_error = out[:2]
    messages = [out[3]] if len(out) > 3 else []
    if not np.isfinite(value):
        raise errors.NumericalError(f"quadrature returned {value}")
    for msg in messages:
        logger.debug("quadrature: %s", msg)
    return value, est_error, messages


def unit_interval(f, x_max=1e100):
    """Map an integrand on [0, inf) to one on [0, 1] through x = 1/g - 1.

    The mapped integrand is taken as 0 where x exceeds `x_max`, which
    includes the endpoint g = 0.

    >>> g = unit_interval(lambda x: 2.0 ** -x)
    >>> g(0.0), g(1.0)
    (0.0, 1.0)

    """
    def mapped(g):
        if g <= 0:
            return 0.0
        x = 1 / g - 1
        if x > x_max:
            return 0.0
        return f(x) / g ** 2
    return mapped


def check_probability(raw):
    """Clamp a probability to [0, 1] after checking it is close to it."""
    if not -PROBABILITY_SLACK <= raw <= 1 + PROBABILITY_SLACK:
        raise errors.NumericalError(f"probability {raw} outside [0, 1]")
    return min(max(raw, 0.0), 1.0)


def require_alpha4(params):
    if params.alpha_i != 4:
        raise errors.UnsupportedExponentError(
            f"closed form derived for alpha_i = 4, got {params.alpha_i}"
        )


def rho_kernel(theta, alpha, quad=None):
    """Interference integral of the MeNBs beyond the serving distance.

    ``theta**(2/alpha) * integral(1 / (1 + u**(alpha/2)), u > theta**(-2/alpha))``

    >>> bool(np.isclose(rho_kernel(1.0, 4), np.pi / 4))
    True

    """
    if not theta > 0:
        raise errors.ParameterError(f"theta must be positive, got {theta}")
    if alpha <= 2:
        raise errors.DivergentInterferenceError(
            f"path-loss exponent must exceed 2, got {alpha}"
        )
    quad = as_quad(quad)
    delta = 2 / alpha
    lower = theta ** -delta
    value, *_ = quadrature(lambda u: 1 / (1 + u ** (alpha / 2)),
                           lower, np.inf, quad)
    return theta ** delta * value


def rho4(theta):
    """Closed form of `rho_kernel` for alpha = 4.

    Uses ``pi/2 - arctan(1/s) = arctan(s)`` for ``s = sqrt(theta) >= 0``.

    >>> rho4(0.0)
    0.0

    """
    root = np.sqrt(theta)
    return float(root * np.arctan(root))


def beta_kernel(alpha):
    """Factor of the Laplace transform of Rayleigh-faded PPP interference.

    >>> bool(beta_kernel(4) == np.pi / 2)
    True

    """
    if alpha <= 2:
        raise errors.DivergentInterferenceError(
            f"path-loss exponent must exceed 2, got {alpha}"
        )
    delta = 2 * np.pi / alpha
    return delta / np.sin(delta)


def omega_kappa(params):
    """Scale of the cellular interference seen by the access link.

    The access-link transmit power is left out; callers divide by it.
    """
    p = params
    delta = 2 / p.alpha_i
    vpe = (p.gamma * p.epsilon * p.r_av_max ** p.alpha_o) ** delta
    tiers = p.lambda_m * p.p_m ** delta + p.kappa * p.lambda_s * p.p_s ** delta
    return np.pi * vpe * tiers * beta_kernel(p.alpha_i)
