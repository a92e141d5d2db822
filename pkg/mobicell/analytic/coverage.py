"""Success probabilities of the backhaul, cellular downlink and access links."""


import functools
import logging

import numpy as np
from scipy import special

from .. import channel, errors, utils
from .base import (AnalyticResult, as_quad, beta_kernel, check_probability,
                   omega_kappa, quadrature, require_alpha4, rho4,
                   unit_interval)


logger = logging.getLogger(__name__)


SERIES_TAIL_TOL = 1e-10
"""Largest magnitude tolerated for the last retained series terms."""

SERIES_PEAK_TOL = 1e6
"""Largest term magnitude before cancellation makes a series unreliable."""


def backhaul_kernels(params, theta=None):
    """Exponent and self-interference coefficients of the backhaul coverage.

    Returns the coefficients of the integrand in the normalized variable
    ``u = pi * lambda_m * r_m**2``: the exponent 𝒵 and the quadratic
    self-interference factor 𝒴₁.
    """
    p = params
    theta = p.theta if theta is None else theta
    senb = p.kappa * (p.lambda_s / p.lambda_m) * (np.pi / 2) * np.sqrt(
        p.p_s * theta / p.p_m
    )
    z = rho4(theta) + senb + 1
    y1 = (p.gamma * p.epsilon * theta * p.p_a
          / (p.p_m * np.pi ** 2 * p.lambda_m ** 2 * p.r_am ** 4))
    return z, y1


def _backhaul_integral(z, y1, quad):
    def integrand(u):
        return np.exp(-u * z) / (1 + y1 * u ** 2)
    return quadrature(unit_interval(integrand), 0, 1, quad)


def p_bh_kappa1(params, quad=None, y1=None):
    """Backhaul success probability when every SeNB reuses the sub-channel.

    Parameters
    ----------
    params : SystemParams
        System parameters, with ``kappa == 1`` and ``alpha_i == 4``.
    quad : QuadratureSpec, optional
        Quadrature tolerances.
    y1 : float, optional
        Self-interference coefficient 𝒴₁ overriding the one of `params`.

    """
    require_alpha4(params)
    if params.kappa != 1:
        raise errors.ParameterError("active small-cell tier expected (kappa=1)")
    z, y1_params = backhaul_kernels(params)
    y1 = y1_params if y1 is None else y1

    raw, err, msgs = _backhaul_integral(z, y1, as_quad(quad))
    return AnalyticResult(check_probability(raw), err, warnings=msgs,
                          diagnostics=dict(Z=z, Y1=y1, rho=rho4(params.theta)))


def p_bh_kappa0(params, quad=None, y2=None):
    """Backhaul success probability without small-cell interference.

    The serving distance is integrated in ``z = 1 / (1 + r/l)`` with the
    length ``l = 1/sqrt(pi*lambda_m)``.
    """
    require_alpha4(params)
    if params.kappa != 0:
        raise errors.ParameterError("inactive small-cell tier expected (kappa=0)")
    p = params
    rho = rho4(p.theta)
    length = 1 / np.sqrt(np.pi * p.lambda_m)
    z_prime = np.pi * p.lambda_m * (1 + rho)
    if y2 is None:
        y2 = p.gamma * p.epsilon * p.theta * p.p_a / (p.p_m * p.r_am ** 4)
    y2_scaled = y2 * length ** 4

    def integrand(s):
        s2 = s * s
        return 2 * s * np.exp(-(1 + rho) * s2) / (1 + y2_scaled * s2 * s2)

    raw, err, msgs = quadrature(unit_interval(integrand, 1e50), 0, 1,
                                as_quad(quad))
    return AnalyticResult(check_probability(raw), err, warnings=msgs,
                          diagnostics=dict(Zp=z_prime, Y2=y2, rho=rho))


def p_dl(params):
    """Success probability of the CUE sharing the sub-channel."""
    p = params
    theta = p.theta
    exponent = (np.pi * p.r_u ** 2 / 2) * np.sqrt(theta / p.p_m) * (
        p.lambda_m * np.sqrt(p.p_m) + p.kappa * p.lambda_s * np.sqrt(p.p_s)
    )
    ratio = p.r_u / p.r_mu
    value = np.exp(-exponent) / (1 + theta * p.epsilon / p.p_m * ratio ** 4)
    variant = np.exp(-exponent) / (1 + theta / p.p_m * ratio ** 2)

    warnings = []
    if p.alpha_i != 4:
        warnings.append(f"closed form derived for alpha_i = 4, "
                        f"evaluated at {p.alpha_i}")
    return AnalyticResult(check_probability(value), warnings=warnings,
                          diagnostics=dict(exponent=exponent,
                                           p_dl_variant=variant))


class AccessLinkSeries:
    """Rician/PPP double series of the access-link success probability.

    Terms are indexed by the Rician order `j`, the inner index `m` and the
    Laplace order `q`. With ``n = j - m`` the term is ::

        K^j (-1)^(n+q) x^q Γ(2q/α + 1)
        ----------------------------------------
        e^K j! n! q! Γ(2q/α - n + 1)

    where ``x = Ω θ^(2/α) / P_ã`` carries all the dependence on the
    interference and the threshold. Reciprocal Gamma functions vanish at
    the non-positive integers.
    """

    def __init__(self, k_factor, alpha, j_max, q_max):
        if k_factor < 0:
            raise errors.ParameterError(
                f"Rician K-factor must be nonnegative, got {k_factor}"
            )
        if j_max < 1 or q_max < 0:
            raise errors.ParameterError("series limits must be positive")

        self.k_factor = k_factor
        self.alpha = alpha
        self.j_max = j_max
        self.q_max = q_max

        j = np.arange(j_max + 1)[:, None, None]
        m = np.arange(j_max + 1)[None, :, None]
        q = np.arange(q_max + 1)[None, None, :]
        n = np.where(m <= j, j - m, 0)
        a = 2 * q / alpha
        den = a - n + 1
        pole = (den <= 0) & (den == np.round(den))
        with np.errstate(all='ignore'):
            log_mag = (special.xlogy(j, k_factor) - k_factor
                       - special.gammaln(j + 1) - special.gammaln(n + 1)
                       - special.gammaln(q + 1)
                       + special.gammaln(a + 1) - special.gammaln(den))
            sign = (-1.0) ** (n + q) * special.gammasgn(den)
        keep = (m <= j) & ~pole & np.isfinite(log_mag)
        self.log_mag = np.where(keep, log_mag, -np.inf)
        """Log-magnitude of the x-independent part of each term."""

        self.sign = np.where(keep, sign, 0.0)
        """Sign of each term, 0 for the vanishing ones."""

        self._q = q

    def terms(self, x):
        """All terms at `x`, in (j, m, q) order."""
        with np.errstate(all='ignore'):
            log_x = special.xlogy(self._q, x)
            return self.sign * np.exp(self.log_mag + log_x)

    @functools.cached_property
    def coefficients(self):
        """Power-series coefficients in `x`, each summed over (j, m)."""
        with np.errstate(all='ignore'):
            terms = self.sign * np.exp(self.log_mag)
        return np.array([utils.compensated_sum(terms[..., q])
                         for q in range(self.q_max + 1)])

    def evaluate(self, x):
        """Sum the series at `x`.

        Returns
        -------
        value : float
        terms_used : (int, int)
            Highest j and q indices of terms above 1e-16.
        warnings : list of str

        """
        terms = self.terms(x)
        value = utils.compensated_sum(terms)
        return (value,) + self._inspect(np.abs(terms), x)

    def evaluate_polynomial(self, x):
        """Sum the series at `x` through its q-coefficients."""
        with np.errstate(over='ignore', invalid='ignore'):
            powers = self.coefficients * x ** np.arange(self.q_max + 1)
        value = utils.compensated_sum(powers)
        return (value,) + self._inspect(np.abs(powers)[None, None, :], x)

    def _inspect(self, mag, x):
        warnings = []
        tail = mag[..., -1].max()
        if mag.shape[0] > 1:
            tail = max(tail, mag[-1].max())
        if tail > SERIES_TAIL_TOL:
            warnings.append(f"series truncated with terms of {tail:.3g} at "
                            f"(J, Q) = ({self.j_max}, {self.q_max}), x = {x:.4g}")
        peak = mag.max()
        if peak > SERIES_PEAK_TOL:
            warnings.append(f"alternating series cancels terms of {peak:.3g}")

        significant = np.argwhere(mag > 1e-16)
        j_used = self.j_max
        q_used = 0
        if len(significant):
            q_used = int(significant[:, -1].max())
            if mag.shape[0] > 1:
                j_used = int(significant[:, 0].max())
        return (j_used, q_used), warnings


@functools.lru_cache(maxsize=64)
def access_link_series(k_factor, alpha, j_max, q_max):
    """Cached `AccessLinkSeries` for a parameter set."""
    return AccessLinkSeries(k_factor, alpha, j_max, q_max)


def access_link_x(params, theta=None):
    """Argument of the access-link series at a threshold."""
    theta = params.theta if theta is None else theta
    return omega_kappa(params) / params.p_a * theta ** (2 / params.alpha_i)


def p_al(params):
    """Success probability of the in-vehicle access link."""
    p = params
    series = access_link_series(p.k_factor, p.alpha_i, p.j_max, p.q_max)
    x = access_link_x(p)
    raw, used, warnings = series.evaluate(x)
    for msg in warnings:
        logger.warning("access link: %s", msg)
    return AnalyticResult(check_probability(raw), terms_used=used,
                          warnings=warnings,
                          diagnostics=dict(Omega=omega_kappa(p), x=x,
                                           beta=beta_kernel(p.alpha_i)))


def p_al_quadrature(params, quad=None, theta=None):
    """Access-link success probability by direct quadrature (alpha_i = 4).

    For alpha_i = 4 the scaled cellular interference ``X`` with Laplace
    transform ``exp(-x sqrt(s))`` is Lévy distributed, so that
    ``P[h > X] = E[erfc(x / (2 sqrt(h)))]`` over the Rician power ``h``.
    """
    require_alpha4(params)
    quad = as_quad(quad)
    k = params.k_factor
    half_x = access_link_x(params, theta) / 2

    def integrand(h):
        if h <= 0:
            return 0.0
        return channel.rician_power_pdf(h, k) * special.erfc(half_x / np.sqrt(h))

    split = k + 1
    head, head_err, head_msgs = quadrature(integrand, 0, split, quad)
    tail, tail_err, tail_msgs = quadrature(integrand, split, np.inf, quad)
    return AnalyticResult(check_probability(head + tail), head_err + tail_err,
                          warnings=head_msgs + tail_msgs,
                          diagnostics=dict(x=2 * half_x))
