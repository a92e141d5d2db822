"""System parameters of the two-tier network with mobile cells.

All quantities are linear: powers in milliwatts, distances in meters,
densities in points per square meter, thresholds and K-factors as ratios.
Decibel inputs are converted at the configuration boundary.
"""


import typing

import pydantic
from pydantic import Field


class SystemParams(pydantic.BaseModel):
    """Symbols of the system model, defaulting to the reference scenario.

    >>> p = SystemParams()
    >>> round(p.p_m, 2), p.kappa, p.j_max
    (31622.78, 1, 70)
    >>> p.replace(gamma=0).gamma
    0.0

    """

    model_config = pydantic.ConfigDict(frozen=True, extra='forbid')

    p_m: float = Field(10 ** 4.5, gt=0)
    """MeNB transmit power (45 dBm)."""

    p_s: float = Field(10 ** 2.3, gt=0)
    """SeNB transmit power (23 dBm)."""

    p_a: float = Field(1.0, gt=0)
    """Access-link antenna transmit power (0 dBm)."""

    lambda_m: float = Field(2e-6, gt=0)
    """MeNB density."""

    lambda_s: float = Field(2e-5, gt=0)
    """SeNB density."""

    alpha_i: float = Field(4.0, gt=2)
    """Path-loss exponent of the non line-of-sight links."""

    alpha_o: float = Field(3.5, gt=2)
    """Path-loss exponent of the in-vehicle line-of-sight link."""

    epsilon: float = Field(0.1, gt=0, le=1)
    """Vehicular penetration factor."""

    gamma: float = Field(1.0, ge=0, le=1)
    """Residual factor of the successive interference cancellation."""

    kappa: typing.Literal[0, 1] = 1
    """Small-cell activity on the shared sub-channel."""

    theta: float = Field(0.1, gt=0)
    """SIR threshold (-10 dB)."""

    k_factor: float = Field(10 ** 0.2, ge=0)
    """Rician K-factor of the access link (2 dB)."""

    r_am: float = Field(5.0, gt=0)
    """Separation between the backhaul and access-link antennas."""

    r_av_max: float = Field(8.0, gt=0)
    """Maximum distance between the access-link antenna and the MUE."""

    j_max: int = Field(70, ge=1)
    """Truncation of the Rician series."""

    q_max: int = Field(70, ge=1)
    """Truncation of the interference Laplace series."""

    r_u: float = Field(50.0, gt=0)
    """Distance between the A-MeNB and the CUE."""

    r_mu: float = Field(100.0, gt=0)
    """Distance between the mobile cell and the CUE."""

    mue_placement: typing.Literal['uniform', 'edge'] = 'uniform'
    """Uniform MUE offset in (0, r_av_max] or fixed at r_av_max."""

    n_cues: int = Field(1, ge=1)
    """Number of CUEs offered to the resource sharing algorithm."""

    cue_radius: float = Field(250.0, gt=0)
    """Radius around the A-MeNB holding the additional CUEs."""

    min_distance: float = Field(0.1, gt=0)
    """Floor applied to interferer distances."""

    def replace(self, **changes):
        """Copy with some fields changed, validating the result."""
        return type(self).model_validate({**self.model_dump(), **changes})

    @classmethod
    def scalar_fields(cls):
        """Names of the numeric fields that can be swept."""
        return tuple(name for name in cls.model_fields
                     if name != 'mue_placement')


class QuadratureSpec(pydantic.BaseModel):
    """Tolerances of the adaptive quadrature."""

    model_config = pydantic.ConfigDict(frozen=True, extra='forbid')

    abs_tol: float = Field(1e-9, gt=0)
    rel_tol: float = Field(1e-7, gt=0)
    max_subdivisions: int = Field(2000, ge=1)
