"""DR-DF Bayesian optimization benchmarks on the SEIR and SIS control problems.

Commands:
    optimize: one run from a config file and/or flags
    baseline: the standard-BO arm (full dimension, random search only, no Adam stage)
    sweep:    grid over reduced dimensions, fill strategies, iteration budgets and seeds with AOFV/RT ratios
    simulate: trajectory of a control file, a saved report or the uncontrolled model

Exit codes: 0 on success, 1 when a run or sweep cell fails, 2 on configuration errors.
"""
import argparse
import os
import sys
import numpy as np
import settings

from dataclasses import replace
from termcolor import colored
from models import epidemic, optimizer
from utils import config as config_file
from utils import reports, summary
from utils.errors import ConfigError, Error
from utils.sweep import SweepSpec, sweep

FILLS = list(optimizer.FILL_STRATEGIES)


def build_parser():
    ps = argparse.ArgumentParser(description='DR-DF Bayesian optimization benchmarks')

    common = argparse.ArgumentParser(add_help=False)
    run = common.add_argument_group('run')
    run.add_argument('--config', help='flat TOML config file, one key = value per line; strings are quoted, e.g. fill = "linear"')
    run.add_argument('--seed', type=int)
    run.add_argument('--out', default=settings.OUT_DIR)
    run.add_argument('--log_dir', default=settings.LOG_DIR, help='TensorBoard log folder')

    mod = common.add_argument_group('model', 'problem and optimizer settings')
    mod.add_argument('--model', choices=['seir', 'sis'])
    mod.add_argument('--d', type=int)
    mod.add_argument('--fill', choices=FILLS)
    mod.add_argument('--iterations', type=int)
    mod.add_argument('--baseline', action='store_true', help='run the standard-BO arm as well (sweep) or instead')

    commands = ps.add_subparsers(dest='command', required=True)
    commands.add_parser('optimize', parents=[common])
    commands.add_parser('baseline', parents=[common])

    sw = commands.add_parser('sweep', parents=[common])
    sw.add_argument('--d_values', type=int, nargs='+')
    sw.add_argument('--fills', choices=FILLS, nargs='+')
    sw.add_argument('--seeds', type=int, nargs='+')
    sw.add_argument('--reference_d', type=int)
    sw.add_argument('--iterations_values', type=int, nargs='+', help='iteration budgets, one set of cells each')

    sim = commands.add_parser('simulate', parents=[common])
    sim.add_argument('--control', help='control values, one per line or comma separated')
    sim.add_argument('--report', help='simulate the best_full control of a saved report')
    sim.add_argument('--accumulated', action='store_true', help='add the accumulated objective column')
    return ps


def _options(args):
    """Config file options with the command-line flags on top"""
    options, text = config_file.load(args.config) if args.config else ({}, None)
    flags = dict(model=args.model, seed=args.seed, d=args.d, fill=args.fill, iterations=args.iterations)
    options.update({key: value for key, value in flags.items() if value is not None})
    return options, text


def _run_name(config):
    return f'd{config.d}-{config.fill_strategy}-seed{config.seed}'


def _print_report(name, report):
    print(f'{name}: AOFV {report.best_objective_full:.6f} '
          f'(reduced {report.best_objective_reduced:.6f}) in {report.wall_time:.2f}s')


def optimize(args, baseline=False):
    options, text = _options(args)
    options, _ = config_file.split_sweep(options)
    config = config_file.build(options)
    if baseline:
        # the standard-BO arm always works on the full horizon
        config = replace(config, d=config.instance.objective.t_f)
    model = config.instance.kind
    command = 'baseline' if baseline else 'optimize'

    log_dir = summary.log_path(args.log_dir, model, command, _run_name(config)) if args.log_dir else None
    run = optimizer.run_baseline_standard_bo if baseline else optimizer.run
    report = run(config, log_dir=log_dir)
    report.config_text = text

    name = f'{model}_{command}_{_run_name(config)}'
    path = reports.write_report(report, os.path.join(args.out, f'{name}.json'))
    _print_report(name, report)
    print(f'report: {path}')
    return 0


def run_sweep(args):
    options, text = _options(args)
    options, sweep_options = config_file.split_sweep(options)
    base = config_file.build(options)
    t_f = base.instance.objective.t_f

    try:
        spec = SweepSpec(
            base=base,
            d_values=args.d_values or sweep_options.get('d_values') or sorted({base.d, t_f}),
            fill_strategies=args.fills or sweep_options.get('fill_strategies') or [base.fill_strategy],
            seeds=args.seeds or sweep_options.get('seeds') or [base.seed],
            reference_d=args.reference_d or sweep_options.get('reference_d'),
            baseline=args.baseline,
            iterations_values=args.iterations_values or sweep_options.get('iterations_values') or (),
        )
    except (Error, TypeError) as e:
        raise ConfigError(f'Invalid sweep: {e}') from e

    model = base.instance.kind
    cells_dir = os.path.join(args.out, f'{model}_sweep')

    def on_cell(cell):
        name = cell.name
        if cell.failed:
            print(colored(f'{name}: failed, {cell.error}', 'red'), file=sys.stderr)
            return
        cell.report.config_text = text
        reports.write_report(cell.report, os.path.join(cells_dir, f'{name}.json'))
        _print_report(name, cell.report)

    result = sweep(spec, on_cell=on_cell)
    path = reports.write_sweep(result.rows(), os.path.join(args.out, f'{model}_sweep.csv'))
    print(f'sweep table: {path}')
    return 1 if result.failures else 0


def simulate(args):
    options, _ = _options(args)
    options, _ = config_file.split_sweep(options)
    config = config_file.build(options)
    instance = config.instance
    t_f = instance.objective.t_f

    if args.report:
        control = reports.read_report(args.report).best_full
    elif args.control:
        control = reports.read_control(args.control)
    else:
        control = np.full(t_f, instance.objective.bounds[0])
    if len(control) != t_f:
        raise ConfigError(f'Control has {len(control)} values, the {instance.kind} horizon is {t_f}')

    # same noise stream as the final evaluation of a run with this seed
    trajectory = epidemic.simulate(instance, control, optimizer.stream(config.seed, optimizer.FINAL))
    path = os.path.join(args.out, f'{instance.kind}_trajectory_seed{config.seed}.csv')
    reports.write_trajectory(trajectory, path, accumulated=args.accumulated)
    print(f'{instance.kind}: AOFV {trajectory.aofv:.6f}, peak I {trajectory.infectious.max():.6f}')
    print(f'trajectory: {path}')
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)

    # absolute path check
    if not os.path.isabs(args.out):
        args.out = os.path.abspath(args.out)

    try:
        if args.command == 'optimize':
            return optimize(args, baseline=args.baseline)
        elif args.command == 'baseline':
            return optimize(args, baseline=True)
        elif args.command == 'sweep':
            return run_sweep(args)
        else:
            return simulate(args)
    except ConfigError as e:
        print(colored(f'config error: {e}', 'red'), file=sys.stderr)
        return 2
    except (Error, OSError) as e:
        print(colored(f'{args.command} failed: {e}', 'red'), file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
