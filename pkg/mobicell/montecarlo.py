"""Monte Carlo estimation of success probabilities and ergodic rates.

Each trial builds a network snapshot from its own random stream, assigns the
shared sub-channel and evaluates the SIR of the links involved. Trials are
independent of the order and the process they run in, so that results do
not depend on the degree of parallelism.
"""


import logging
import math
import multiprocessing
import typing

import numpy as np
import pydantic
import tqdm
from pydantic import Field

from . import analytic, drsa, errors, geometry, links, utils
from .params import QuadratureSpec, SystemParams


logger = logging.getLogger(__name__)


TARGETS = ('p_bh', 'p_dl', 'p_al', 't_bh', 't_dl', 't_al', 'q_omega')
"""Estimable quantities, in output order."""

LINKS = ('BH', 'DL', 'AL')

TARGET_LINK = {'p_bh': 'BH', 'p_dl': 'DL', 'p_al': 'AL',
               't_bh': 'BH', 't_dl': 'DL', 't_al': 'AL'}
"""Link whose SIR each target is computed from."""

MODES = (drsa.SHARE_WITH_BACKHAUL, drsa.SHARE_WITH_CUE, drsa.EXCLUSIVE_AL)


class ExperimentConfig(pydantic.BaseModel):
    """Settings of a Monte Carlo experiment."""

    model_config = pydantic.ConfigDict(frozen=True, extra='forbid')

    params: SystemParams = SystemParams()
    n_trials: int = Field(10000, ge=1)
    base_seed: int = Field(0, ge=0, lt=2 ** 64)
    window_km: typing.Tuple[float, float] = (40.0, 40.0)
    targets: typing.Tuple[typing.Literal[TARGETS], ...] = ('p_bh',)
    bh_load: float = Field(1.0, ge=0, le=1)
    """Probability that the backhaul has data in a trial."""

    workers: int = Field(1, ge=1)
    """Worker processes, results do not depend on it."""

    @pydantic.field_validator('window_km')
    @classmethod
    def _positive_window(cls, value):
        if min(value) <= 0:
            raise ValueError("window sides must be positive")
        return value

    @pydantic.field_validator('targets')
    @classmethod
    def _canonical_targets(cls, value):
        if not value:
            raise ValueError("at least one target is required")
        return tuple(t for t in TARGETS if t in value)

    def window(self):
        return geometry.Window.square(*self.window_km)

    def links(self):
        """Links whose SIR the targets need."""
        needed = {TARGET_LINK[t] for t in self.targets if t in TARGET_LINK}
        return tuple(link for link in LINKS if link in needed)


class Estimate:
    """Sample mean with its 95% confidence half-width."""

    def __init__(self, mean, ci95_halfwidth, n, infinite_sir_count=0):
        self.mean = mean
        self.ci95_halfwidth = ci95_halfwidth
        self.n = n
        self.infinite_sir_count = infinite_sir_count

    @classmethod
    def from_samples(cls, samples, infinite_sir_count=0):
        """Estimate from indicator or rate samples.

        >>> e = Estimate.from_samples([1, 0, 1, 1])
        >>> e.mean, e.n
        (0.75, 4)

        """
        samples = np.asarray(samples, float)
        n = samples.size
        if n == 0:
            return cls(np.nan, np.nan, 0, infinite_sir_count)
        var = samples.var(ddof=1) if n > 1 else 0.0
        return cls(float(samples.mean()), 1.96 * math.sqrt(var / n), n,
                   infinite_sir_count)

    def __repr__(self):
        return (f'Estimate({self.mean!r}, ci95_halfwidth={self.ci95_halfwidth!r}'
                f', n={self.n}, infinite_sir_count={self.infinite_sir_count})')


class TrialBatch:
    """Per-trial outcomes of an experiment, indexed by trial."""

    def __init__(self, n_trials, links):
        self.sir = {link: np.full(n_trials, np.nan) for link in links}
        """SIR of each link, NaN in the trials where it was not active."""

        self.mode = np.zeros(n_trials, dtype=np.int8)
        """Index in `MODES` of the sub-channel assignment."""

        self.q_omega = np.zeros(n_trials, dtype=np.int64)
        """Reuse factor of the A-MeNB macrocell."""

    def store(self, start, chunk):
        stop = start + len(chunk['mode'])
        for link, sir in chunk['sir'].items():
            self.sir[link][start:stop] = sir
        self.mode[start:stop] = chunk['mode']
        self.q_omega[start:stop] = chunk['q_omega']

    def mode_count(self, mode):
        return int(np.count_nonzero(self.mode == MODES.index(mode)))


def run_trial(config, index):
    """Run a single trial.

    Returns
    -------
    samples : dict
        `LinkSample` of each link active in the trial.
    assignment : Assignment
        Sub-channel assignment of the trial.
    reuse : ReuseReport
        Reuse of the sub-channel in the A-MeNB macrocell.

    """
    params = config.params
    rng = utils.trial_rng(config.base_seed, index)
    try:
        snap = geometry.build_snapshot(params, rng, config.window())
    except errors.SnapshotError as e:
        raise errors.SnapshotError(str(e), trial=index) from e

    has_data = rng.random() < config.bh_load
    assignment = drsa.assign_subchannel(has_data, snap.cue_distances())
    wanted = config.links()

    samples = {}
    if 'BH' in wanted and assignment.mode == drsa.SHARE_WITH_BACKHAUL:
        samples['BH'] = links.sir_backhaul(snap, params, rng)
    if 'DL' in wanted and assignment.mode == drsa.SHARE_WITH_CUE:
        samples['DL'] = links.sir_cellular_dl(snap, params, rng,
                                              assignment.cue_index)
    if 'AL' in wanted:
        amenb_active = assignment.mode != drsa.EXCLUSIVE_AL
        samples['AL'] = links.sir_access_link(snap, params, rng, amenb_active)

    reuse = drsa.macrocell_reuse(snap, params.kappa)
    return samples, assignment, reuse


def _run_chunk(args):
    config, start, stop = args
    links_ = config.links()
    chunk = dict(sir={link: np.full(stop - start, np.nan) for link in links_},
                 mode=np.zeros(stop - start, dtype=np.int8),
                 q_omega=np.zeros(stop - start, dtype=np.int64))
    for offset, index in enumerate(range(start, stop)):
        samples, assignment, reuse = run_trial(config, index)
        for link, sample in samples.items():
            chunk['sir'][link][offset] = sample.sir
        chunk['mode'][offset] = MODES.index(assignment.mode)
        chunk['q_omega'][offset] = reuse.q_omega
    return start, chunk


def run_trials(config, workers=None, progress=False):
    """Run all trials of an experiment and collect their outcomes."""
    workers = config.workers if workers is None else workers
    n = config.n_trials
    chunk_size = max(1, min(500, math.ceil(n / (4 * workers))))
    tasks = [(config, start, min(start + chunk_size, n))
             for start in range(0, n, chunk_size)]
    batch = TrialBatch(n, config.links())
    logger.info("running %d trials on %d worker(s)", n, workers)

    with tqdm.tqdm(total=n, unit='trial', disable=None if progress else True) as bar:
        if workers > 1:
            with multiprocessing.Pool(processes=workers) as pool:
                for start, chunk in pool.imap(_run_chunk, tasks):
                    batch.store(start, chunk)
                    bar.update(len(chunk['mode']))
        else:
            for start, chunk in map(_run_chunk, tasks):
                batch.store(start, chunk)
                bar.update(len(chunk['mode']))
    return batch


def summarize(batch, targets, theta):
    """Estimates of the targets from a trial batch at an SIR threshold."""
    estimates = {}
    for target in targets:
        if target == 'q_omega':
            estimates[target] = Estimate.from_samples(batch.q_omega)
            continue

        sir = batch.sir[TARGET_LINK[target]]
        active = sir[~np.isnan(sir)]
        infinite = int(np.count_nonzero(np.isinf(active)))
        if target.startswith('p_'):
            samples = active > theta
        else:
            samples = np.log1p(active[np.isfinite(active)])
        estimates[target] = Estimate.from_samples(samples, infinite)
    return estimates


def inactive_link_warning(config, target, estimate):
    """Warning for a target whose link no trial evaluated, else None."""
    if estimate.n > 0 or target not in TARGET_LINK:
        return None
    link = TARGET_LINK[target]
    message = f"{target}: no trial evaluated the {link} link"
    if link == 'DL' and config.bh_load == 1:
        message += " (bh_load=1, the backhaul always takes the sub-channel)"
    elif link == 'DL':
        message += " (no CUE was eligible to share the sub-channel)"
    return message


def run_experiment(config, workers=None, progress=False):
    """Estimate every target of an experiment.

    Returns
    -------
    dict
        `Estimate` of each target.

    """
    batch = run_trials(config, workers, progress)
    estimates = summarize(batch, config.targets, config.params.theta)
    for target, est in estimates.items():
        warning = inactive_link_warning(config, target, est)
        if warning:
            logger.warning(warning)
    return estimates


class SweepTable:
    """Analytic and simulated values over a parameter grid."""

    COLUMNS = ('series', 'axis', 'value', 'target', 'analytic', 'est_error',
               'terms_used', 'simulated', 'ci95', 'n', 'infinite_sir',
               'exclusive_al', 'warnings', 'error')

    def __init__(self, rows=None):
        self.rows = [] if rows is None else list(rows)
        """Rows as dictionaries keyed by `COLUMNS`."""

    def add(self, **fields):
        row = dict.fromkeys(self.COLUMNS, '')
        row.update(fields)
        self.rows.append(row)

    def extend(self, other):
        self.rows.extend(other.rows)

    def column(self, name, **where):
        """Values of a column in the rows matching the given fields."""
        return [row[name] for row in self.rows
                if all(row[k] == v for k, v in where.items())]

    def __len__(self):
        return len(self.rows)


def analytic_columns(target, params, quad):
    if target == 'q_omega':
        value = drsa.expected_reuse_factor(params.lambda_s, 1 / params.lambda_m,
                                           params.kappa)
        return dict(analytic=value, est_error=0.0)
    try:
        result = analytic.evaluate(target, params, quad)
    except (errors.ParameterError, errors.NumericalError) as e:
        logger.warning("analytic %s failed: %s", target, e)
        return dict(error=f"analytic: {e}")
    return dict(analytic=result.value, est_error=result.est_error,
                terms_used=result.terms_used or '',
                warnings='; '.join(result.warnings))


def run_sweep(config, axis, grid, workers=None, progress=False, quad=None,
              series=''):
    """Evaluate analytic and simulated targets over a grid of one parameter.

    Errors at a grid point are recorded in its rows and the sweep continues.
    """
    if axis not in SystemParams.scalar_fields():
        raise errors.ParameterError(f"cannot sweep over `{axis}`")
    quad = QuadratureSpec() if quad is None else quad
    table = SweepTable()

    shared_batch = None
    if axis == 'theta':
        shared_batch = run_trials(config, workers, progress)

    for value in grid:
        if isinstance(getattr(config.params, axis), int) and float(value).is_integer():
            value = int(value)
        base = dict(series=series, axis=axis, value=value)
        try:
            params = config.params.replace(**{axis: value})
        except pydantic.ValidationError as e:
            for target in config.targets:
                table.add(target=target, error=f"params: {e}", **base)
            continue

        try:
            if shared_batch is None:
                point = config.model_copy(update=dict(params=params))
                batch = run_trials(point, workers, progress)
            else:
                batch = shared_batch
            estimates = summarize(batch, config.targets, params.theta)
            exclusive = batch.mode_count(drsa.EXCLUSIVE_AL)
        except errors.MobicellError as e:
            logger.warning("simulation at %s=%g failed: %s", axis, value, e)
            estimates = {}
            exclusive = ''
            sim_error = f"simulation: {e}"
        else:
            sim_error = ''

        for target in config.targets:
            fields = dict(base, target=target, exclusive_al=exclusive)
            fields.update(analytic_columns(target, params, quad))
            est = estimates.get(target)
            if est is not None:
                fields.update(simulated=est.mean, ci95=est.ci95_halfwidth,
                              n=est.n, infinite_sir=est.infinite_sir_count)
                warning = inactive_link_warning(config, target, est)
                if warning:
                    logger.warning(warning)
                    fields['warnings'] = '; '.join(
                        w for w in (fields.get('warnings', ''), warning) if w
                    )
            if sim_error:
                fields['error'] = '; '.join(
                    e for e in (fields.get('error', ''), sim_error) if e
                )
            table.add(**fields)
        logger.info("sweep point %s=%g done", axis, value)
    return table
