"""Analytic success probabilities, power control and ergodic rates."""


from .. import errors
from .base import (AnalyticResult, beta_kernel, omega_kappa, rho4,
                   rho_kernel)
from .coverage import (p_al, p_al_quadrature, p_bh_kappa0, p_bh_kappa1,
                       p_dl)
from .power import (al_transmit_power, p_al_power_controlled,
                    power_controlled_backhaul, success_link_params, xi_factor)
from .rates import ergodic_rate_al, ergodic_rate_bh, ergodic_rate_dl


def p_bh(params, quad=None):
    """Backhaul success probability for the small-cell activity of `params`."""
    if params.kappa == 1:
        return p_bh_kappa1(params, quad)
    return p_bh_kappa0(params, quad)


def success_probability(link, params, quad=None):
    """Success probability of the `BH`, `DL` or `AL` link."""
    return evaluate(f"p_{link.lower()}", params, quad)


def ergodic_rate(link, params, quad=None):
    """Ergodic rate of the `BH`, `DL` or `AL` link, in nats/s/Hz."""
    return evaluate(f"t_{link.lower()}", params, quad)


EVALUATORS = {
    'p_bh': p_bh,
    'p_dl': lambda params, quad=None: p_dl(params),
    'p_al': lambda params, quad=None: p_al(params),
    't_bh': ergodic_rate_bh,
    't_dl': ergodic_rate_dl,
    't_al': ergodic_rate_al,
}
"""Analytic evaluator of each Monte Carlo target."""


def evaluate(target, params, quad=None):
    """Analytic counterpart of a Monte Carlo target."""
    try:
        evaluator = EVALUATORS[target]
    except KeyError:
        raise errors.ParameterError(f"no analytic expression for target `{target}`")
    return evaluator(params, quad)
