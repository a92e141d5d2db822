"""JSON run configurations of the command-line front end.

Powers are given in dBm and the SIR threshold and K-factor may be given in
dB; they are converted to the linear units of `SystemParams` on loading.

>>> run = RunConfig.model_validate(
...     {'base_seed': 1, 'params': {'p_m': 46, 'theta_db': 0}}
... )
>>> run.params.theta
1.0
>>> run.params.p_m == 10 ** 4.6
True

"""


import math
import typing

import pydantic
from pydantic import Field

from . import montecarlo, utils
from .params import QuadratureSpec, SystemParams


DBM_FIELDS = ('p_m', 'p_s', 'p_a')
"""Power fields given in dBm."""

DB_FIELDS = ('theta', 'k_factor')
"""Ratio fields that may be given in dB with a ``_db`` suffix."""


def _to_linear(name, value):
    try:
        db = float(value)
    except (TypeError, ValueError):
        raise ValueError(f"`{name}` must be a number in decibels")
    if not math.isfinite(db):
        raise ValueError(f"`{name}` must be finite")
    return utils.db_to_linear(db)


class ExperimentBlock(pydantic.BaseModel):
    """Monte Carlo settings of a run file."""

    model_config = pydantic.ConfigDict(frozen=True, extra='forbid')

    n_trials: int = Field(10000, ge=1)
    window_km: typing.Tuple[float, float] = (40.0, 40.0)
    targets: typing.Tuple[typing.Literal[montecarlo.TARGETS], ...] = ('p_bh',)
    bh_load: float = Field(1.0, ge=0, le=1)
    workers: int = Field(1, ge=1)


class GridBlock(pydantic.BaseModel):
    """Values of a swept parameter, linear or in decibels."""

    model_config = pydantic.ConfigDict(frozen=True, extra='forbid')

    axis: str
    values: typing.Optional[typing.List[float]] = None
    values_db: typing.Optional[typing.List[float]] = None

    @pydantic.field_validator('axis')
    @classmethod
    def _known_axis(cls, value):
        if value not in SystemParams.scalar_fields():
            raise ValueError(f"`{value}` is not a numeric system parameter")
        return value

    @pydantic.model_validator(mode='after')
    def _one_scale(self):
        if (self.values is None) == (self.values_db is None):
            raise ValueError("exactly one of `values` and `values_db` is needed")
        if not (self.values or self.values_db):
            raise ValueError("the grid is empty")
        return self

    def points(self):
        """Grid values in the linear units of `SystemParams`."""
        if self.values is not None:
            return list(self.values)
        return [_to_linear(self.axis, v) for v in self.values_db]

    def labels(self):
        """Grid values on the scale they were given in."""
        return list(self.values if self.values is not None else self.values_db)


class PowerControlBlock(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True, extra='forbid')

    targets: typing.List[float] = Field(min_length=1)


class RunConfig(pydantic.BaseModel):
    """Contents of a run file."""

    model_config = pydantic.ConfigDict(frozen=True, extra='forbid')

    base_seed: int = Field(ge=0, lt=2 ** 64)
    params: SystemParams
    experiment: ExperimentBlock = ExperimentBlock()
    quadrature: QuadratureSpec = QuadratureSpec()
    grid: typing.Optional[GridBlock] = None
    series: typing.Optional[GridBlock] = None
    power_control: typing.Optional[PowerControlBlock] = None

    @pydantic.field_validator('params', mode='before')
    @classmethod
    def _from_decibels(cls, value):
        if not isinstance(value, dict):
            return value
        if 'p_m' not in value:
            raise ValueError("field `p_m` (MeNB power in dBm) is required")
        data = dict(value)
        for name in DBM_FIELDS:
            if name in data:
                data[name] = _to_linear(name, data[name])
        for name in DB_FIELDS:
            key = f'{name}_db'
            if key in data:
                if name in data:
                    raise ValueError(f"give only one of `{name}` and `{key}`")
                data[name] = _to_linear(key, data.pop(key))
        return data

    @classmethod
    def load(cls, path):
        with open(path, encoding='utf-8') as fid:
            return cls.model_validate_json(fid.read())

    def with_overrides(self, seed=None, trials=None):
        """Copy with the seed and number of trials of the command line."""
        update = {}
        if seed is not None:
            update['base_seed'] = seed
        if trials is not None:
            update['experiment'] = ExperimentBlock.model_validate(
                {**self.experiment.model_dump(), 'n_trials': trials}
            )
        data = self.model_dump(mode='json')
        data['params'] = self.params
        merged = {**data, **update}
        return type(self).model_validate(merged)

    def experiment_config(self, params=None):
        exp = self.experiment
        return montecarlo.ExperimentConfig(
            params=self.params if params is None else params,
            n_trials=exp.n_trials, base_seed=self.base_seed,
            window_km=exp.window_km, targets=exp.targets,
            bh_load=exp.bh_load, workers=exp.workers,
        )

    def digest(self):
        """Hash of the settings that determine the results."""
        data = self.model_dump(mode='json', exclude={'experiment': {'workers'}})
        return utils.config_digest(data)
