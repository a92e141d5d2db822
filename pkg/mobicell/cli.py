"""Command-line front end writing CSV tables and SVG plots.

Usage::

    mobicell <analytic|simulate|sweep|power-control> --config run.json --out dir

Exit status is 0 on success, 2 for configuration errors and 3 for numerical
failures. Warnings never change the exit status.
"""


import argparse
import csv
import json
import logging
import os
import sys
import time
import typing

import numpy as np
import pydantic

from . import __version__, analytic, channel, errors, montecarlo, svgplot
from .config import RunConfig


logger = logging.getLogger(__name__)


CSV_SCHEMA = 1
"""Version of the CSV column layout."""

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

POWER_CONTROL_COLUMNS = ('target', 'p_a_mw', 'p_a_dbm', 'p_bh', 'est_error',
                         'p_al_round_trip', 'xi', 'status')


class RunManifest(pydantic.BaseModel):
    """Record of a command run, written after every other output."""

    command: typing.Literal['analytic', 'simulate', 'sweep', 'power-control']
    config_path: str
    output_dir: str
    emitted_files: typing.List[str] = []
    wall_time: float = 0.0
    tool_version: str = __version__
    base_seed: int


def format_cell(value):
    """Deterministic text of a CSV cell.

    >>> format_cell(0.1), format_cell(np.float64(2.5)), format_cell((70, 3))
    ('0.1', '2.5', '70/3')

    """
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, tuple):
        return '/'.join(format_cell(v) for v in value)
    return str(value)


def write_csv(path, columns, rows, run):
    """Write rows to a CSV file preceded by a metadata comment line."""
    with open(path, 'w', newline='', encoding='utf-8') as fid:
        fid.write(f'# mobicell {__version__} schema={CSV_SCHEMA} '
                  f'seed={run.base_seed} config={run.digest()}\n')
        writer = csv.writer(fid, lineterminator='\n')
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_cell(row.get(c, '')) for c in columns])
    logger.info("wrote %s", path)


def _grid(run):
    if run.grid is None:
        return 'theta', [run.params.theta], [run.params.theta]
    return run.grid.axis, run.grid.points(), run.grid.labels()


def _series(run):
    if run.series is None:
        return [('', run.params)]
    axis = run.series.axis
    out = []
    for label, value in zip(run.series.labels(), run.series.points()):
        if isinstance(getattr(run.params, axis), int) and value.is_integer():
            value = int(value)
        out.append((f'{axis}={label:g}', run.params.replace(**{axis: value})))
    return out


def _relabel(table, points, labels):
    """Show grid values on the scale they were given in."""
    lookup = dict(zip(points, labels))
    for row in table.rows:
        row['value'] = lookup.get(row['value'], row['value'])


def cmd_analytic(run, args):
    """Analytic values of the targets over the grid."""
    axis, points, labels = _grid(run)
    table = montecarlo.SweepTable()
    for series, base in _series(run):
        for value, label in zip(points, labels):
            if isinstance(getattr(base, axis), int) and float(value).is_integer():
                value = int(value)
            params = base.replace(**{axis: value})
            for target in run.experiment.targets:
                fields = montecarlo.analytic_columns(target, params, run.quadrature)
                table.add(series=series, axis=axis, value=label, target=target,
                          **fields)
    return table


def cmd_simulate(run, args):
    """Analytic and simulated values at the configured parameters."""
    config = run.experiment_config()
    return montecarlo.run_sweep(config, 'theta', [run.params.theta],
                                workers=args.workers, progress=args.progress,
                                quad=run.quadrature)


def cmd_sweep(run, args):
    """Analytic and simulated values over the grid, one curve per series."""
    axis, points, labels = _grid(run)
    table = montecarlo.SweepTable()
    for series, params in _series(run):
        config = run.experiment_config(params)
        part = montecarlo.run_sweep(config, axis, points, workers=args.workers,
                                    progress=args.progress, quad=run.quadrature,
                                    series=series)
        table.extend(part)
    _relabel(table, points, labels)
    return table


def cmd_power_control(run, args):
    """Access-link transmit power and backhaul success for each target."""
    if run.power_control is None:
        raise errors.ParameterError("the `power_control` block is required")
    params = run.params
    xi = analytic.xi_factor(params.k_factor, params.alpha_i, params.j_max)
    rows = []
    for target in run.power_control.targets:
        row = dict(target=target, xi=xi)
        try:
            power, result = analytic.power_controlled_backhaul(
                params, target, run.quadrature
            )
        except errors.InfeasibleTargetError as e:
            logger.warning("target %g: %s", target, e)
            row['status'] = 'infeasible'
        else:
            check = analytic.p_al_power_controlled(params.replace(p_a=power))
            row.update(p_a_mw=power, p_a_dbm=channel.linear_to_dbm(power),
                       p_bh=result.value, est_error=result.est_error,
                       p_al_round_trip=check.value, status='ok')
        rows.append(row)
    return rows


COMMANDS = {
    'analytic': cmd_analytic,
    'simulate': cmd_simulate,
    'sweep': cmd_sweep,
    'power-control': cmd_power_control,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog='mobicell',
        description="Mobile-cell resource sharing evaluation.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument('command', choices=sorted(COMMANDS))
    parser.add_argument('--config', required=True, help="JSON run file")
    parser.add_argument('--out', default='.', help="output directory")
    parser.add_argument('--seed', type=int, help="override the base seed")
    parser.add_argument('--trials', type=int, help="override the trial count")
    parser.add_argument('--workers', type=int, help="worker processes")
    parser.add_argument('--svg', action='store_true', help="also write plots")
    parser.add_argument('--progress', action='store_true',
                        help="show a progress bar")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true')
    verbosity.add_argument('-q', '--quiet', action='store_true')
    return parser


def _write_svgs(table, out_dir, stem):
    files = []
    for target in dict.fromkeys(row['target'] for row in table.rows):
        path = os.path.join(out_dir, f'{stem}_{target}.svg')
        svgplot.sweep_plot(table, target).save(path)
        logger.info("wrote %s", path)
        files.append(path)
    return files


def run_command(args):
    start = time.perf_counter()
    run = RunConfig.load(args.config).with_overrides(args.seed, args.trials)
    logger.info("%s: config %s, seed %d", args.command, run.digest(),
                run.base_seed)
    os.makedirs(args.out, exist_ok=True)
    stem = args.command.replace('-', '_')
    csv_path = os.path.join(args.out, f'{stem}.csv')

    result = COMMANDS[args.command](run, args)
    if args.command == 'power-control':
        write_csv(csv_path, POWER_CONTROL_COLUMNS, result, run)
        emitted = [csv_path]
    else:
        write_csv(csv_path, montecarlo.SweepTable.COLUMNS, result.rows, run)
        emitted = [csv_path]
        if args.svg:
            emitted += _write_svgs(result, args.out, stem)

    manifest = RunManifest(
        command=args.command, config_path=os.path.abspath(args.config),
        output_dir=os.path.abspath(args.out), emitted_files=emitted,
        wall_time=time.perf_counter() - start, base_seed=run.base_seed,
    )
    manifest_path = os.path.join(args.out, 'manifest.json')
    with open(manifest_path, 'w', encoding='utf-8') as fid:
        json.dump(manifest.model_dump(), fid, indent=2)
        fid.write('\n')
    logger.info("%s finished in %.1f s", args.command, manifest.wall_time)
    return manifest


def main(argv=None):
    args = build_parser().parse_args(argv)
    level = (logging.DEBUG if args.verbose else
             logging.WARNING if args.quiet else logging.INFO)
    logging.basicConfig(level=level,
                        format="%(levelname)s %(name)s: %(message)s")

    try:
        run_command(args)
    except pydantic.ValidationError as e:
        for err in e.errors():
            loc = '.'.join(str(part) for part in err['loc']) or '<root>'
            logger.error("invalid configuration at %s: %s", loc, err['msg'])
        return EXIT_CONFIG
    except (OSError, errors.ParameterError) as e:
        logger.error("%s", e)
        return EXIT_CONFIG
    except errors.MobicellError as e:
        logger.error("numerical failure: %s", e)
        return EXIT_NUMERICAL
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
