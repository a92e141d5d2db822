"""Access-link transmit power control and its effect on the backhaul.

The access-link success probability is approximated by the exponential form
``exp(-Ω √θ / P_ã) Ξ`` in which ``Ξ`` collects the Rician part of the series
that is free of the transmit power. Inverting it gives the transmit power
that meets a success target, and the power sets the self-interference seen
by the backhaul antenna.
"""


import functools
import logging

import numpy as np

from .. import channel, errors, utils
from .base import AnalyticResult, check_probability, omega_kappa, require_alpha4
from .coverage import access_link_series, p_bh_kappa0, p_bh_kappa1


logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=256)
def xi_factor(k_factor, alpha, j_max):
    """Power-free Rician factor Ξ of the access-link success probability.

    Only the zeroth Laplace order survives, so that Ξ is the Poisson(K)
    mass of the retained Rician orders.

    >>> xi_factor(0.0, 4.0, 70)
    1.0

    """
    series = access_link_series(k_factor, alpha, j_max, 0)
    return utils.compensated_sum(series.terms(0.0))


def _required_power(p_al_target, params):
    require_alpha4(params)
    if not p_al_target > 0:
        raise errors.ParameterError(
            f"success target must be positive, got {p_al_target}"
        )
    xi = xi_factor(params.k_factor, params.alpha_i, params.j_max)
    if p_al_target >= xi:
        raise errors.InfeasibleTargetError(
            f"success target {p_al_target} not below Ξ = {xi:.6g}"
        )
    omega = omega_kappa(params)
    return omega * np.sqrt(params.theta) / (np.log(xi) - np.log(p_al_target))


def al_transmit_power(p_al_target, params):
    """Access-link transmit power meeting a success probability target.

    Returns
    -------
    PowerLevel
        Required transmit power.

    Raises
    ------
    InfeasibleTargetError
        If the target is not below Ξ.

    """
    power = _required_power(p_al_target, params)
    if power == 0:
        raise errors.ParameterError(
            "access link is free of interference, any power meets the target"
        )
    return channel.PowerLevel(power)


def p_al_power_controlled(params):
    """Exponential form of the access-link success probability."""
    require_alpha4(params)
    xi = xi_factor(params.k_factor, params.alpha_i, params.j_max)
    omega = omega_kappa(params)
    raw = np.exp(-omega * np.sqrt(params.theta) / params.p_a) * xi
    return AnalyticResult(check_probability(raw),
                          diagnostics=dict(Omega=omega, Xi=xi))


def success_link_params(params, p_al_target):
    """Backhaul self-interference coefficients (𝒴₁, 𝒴₂) under power control."""
    p = params
    power = _required_power(p_al_target, p)
    scale = p.gamma * p.theta * p.epsilon / (p.p_m * p.r_am ** 4)
    y1 = scale / (np.pi ** 2 * p.lambda_m ** 2) * power
    y2 = scale * power
    return y1, y2


def power_controlled_backhaul(params, p_al_target, quad=None):
    """Transmit power and backhaul success probability for a target.

    Returns
    -------
    power : float
        Access-link transmit power, in milliwatts.
    p_bh : AnalyticResult
        Backhaul success probability with the resulting self-interference.

    """
    power = _required_power(p_al_target, params)
    y1, y2 = success_link_params(params, p_al_target)
    if params.kappa == 1:
        result = p_bh_kappa1(params, quad, y1=y1)
    else:
        result = p_bh_kappa0(params, quad, y2=y2)
    result.diagnostics['p_a'] = power
    logger.debug("target %g: P_a = %g mW, p_bh = %g",
                 p_al_target, power, result.value)
    return power, result
