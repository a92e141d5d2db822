"""Ergodic rates E[ln(1 + SIR)] of the three links, in nats/s/Hz.

Each rate integrates the success probability at threshold ``e^t - 1`` over
``t > 0``, mapped to the unit interval by ``t = 1/g - 1``.
"""


import logging

import numpy as np

from .base import (AnalyticResult, as_quad, omega_kappa, quadrature,
                   require_alpha4, rho4, unit_interval)
from .coverage import access_link_series, p_al_quadrature


logger = logging.getLogger(__name__)


RATE_HORIZON = 20.0
"""Rate below which an integrand that has not started to decay is flagged."""

EXP_LIMIT = 700.0
"""Largest exponent evaluated before the integrands are taken as 0."""


def _interference_free(decay_terms):
    threshold = np.expm1(RATE_HORIZON)
    return all(term(threshold) < 1 for term in decay_terms)


def _free_warning(name):
    return (f"{name} nearly interference free: the rate integrand has not "
            f"decayed at {RATE_HORIZON:g} nats/s/Hz")


def ergodic_rate_bh(params, quad=None):
    """Ergodic rate of the backhaul link."""
    require_alpha4(params)
    quad = as_quad(quad)
    p = params
    f_coef = p.p_a * p.gamma * p.epsilon / (p.p_m * p.r_am ** 4)
    y_coef = f_coef / (np.pi ** 2 * p.lambda_m ** 2)
    senb = p.kappa * (p.lambda_s / p.lambda_m) * (np.pi / 2) * np.sqrt(p.p_s / p.p_m)

    inner_error = []

    def coverage(t):
        if t > EXP_LIMIT:
            return 0.0
        threshold = np.expm1(t)
        z = 1 + rho4(threshold) + senb * np.sqrt(threshold)
        y = y_coef * threshold

        def integrand(u):
            return np.exp(-u * z) / (1 + y * u ** 2)

        value, err, _ = quadrature(unit_interval(integrand), 0, 1, quad)
        inner_error.append(err)
        return value

    value, err, msgs = quadrature(unit_interval(coverage), 0, 1, quad)
    return AnalyticResult(value, err + max(inner_error, default=0.0),
                          warnings=msgs, diagnostics=dict(F=f_coef))


def _dl_rate(a_coef, b_coef, quad):
    def integrand(t):
        if t > EXP_LIMIT:
            return 0.0
        threshold = np.expm1(t)
        return np.exp(-a_coef * np.sqrt(threshold)) / (1 + b_coef * threshold)

    return quadrature(unit_interval(integrand), 0, 1, quad)


def ergodic_rate_dl(params, quad=None):
    """Ergodic rate of the CUE sharing the sub-channel.

    The interferer term uses the coefficient ``A = pi r_u^2 (...) / 2`` of the
    closed-form success probability. The whole-plane Laplace transform of the
    interference at ``alpha_i = 4`` carries one more factor of pi; the rate
    with ``pi * A`` is returned in ``diagnostics['t_dl_variant']``.
    """
    p = params
    quad = as_quad(quad)
    a_coef = np.pi * p.r_u ** 2 * (
        p.lambda_m + p.lambda_s * p.kappa * np.sqrt(p.p_s / p.p_m)
    ) / 2
    b_coef = (p.r_u / p.r_mu) ** 2 / p.p_m

    value, err, msgs = _dl_rate(a_coef, b_coef, quad)
    variant, _, _ = _dl_rate(np.pi * a_coef, b_coef, quad)
    warnings = list(msgs)
    if _interference_free([lambda s: a_coef * np.sqrt(s),
                           lambda s: b_coef * s]):
        warnings.append(_free_warning("cellular downlink"))
        logger.warning(warnings[-1])
    return AnalyticResult(value, err, warnings=warnings,
                          diagnostics=dict(A=a_coef, B=b_coef,
                                           t_dl_variant=variant))


def ergodic_rate_al(params, quad=None):
    """Ergodic rate of the access link.

    The success probability is summed from its series wherever the series
    converges without cancellation and integrated directly elsewhere.
    """
    require_alpha4(params)
    quad = as_quad(quad)
    p = params
    series = access_link_series(p.k_factor, p.alpha_i, p.j_max, p.q_max)
    x_coef = omega_kappa(p) / p.p_a
    fallbacks = []

    def coverage(t):
        if t > EXP_LIMIT:
            return 0.0
        threshold = np.expm1(t)
        value, _, warnings = series.evaluate_polynomial(x_coef * np.sqrt(threshold))
        if warnings or not -1e-9 <= value <= 1 + 1e-9:
            fallbacks.append(t)
            value = p_al_quadrature(p, quad, theta=threshold).value
        return value

    value, err, msgs = quadrature(unit_interval(coverage), 0, 1, quad)
    warnings = list(msgs)
    if fallbacks:
        logger.debug("access-link rate: %d direct quadratures from t = %.3g",
                     len(fallbacks), min(fallbacks))
    if _interference_free([lambda s: x_coef * np.sqrt(s)]):
        warnings.append(_free_warning("access link"))
        logger.warning(warnings[-1])
    return AnalyticResult(value, err, terms_used=(p.j_max, p.q_max),
                          warnings=warnings,
                          diagnostics=dict(Omega=omega_kappa(p),
                                           fallbacks=len(fallbacks)))
