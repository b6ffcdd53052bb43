import csv
import json
import os
import numpy as np

from models.optimizer import RunReport, TraceRecord

SWEEP_COLUMNS = ['model', 'd', 'fill', 'seed', 'aofv', 'rt_seconds', 'aofv_ratio', 'rt_ratio', 'iterations']
TRAJECTORY_COLUMNS = ['t', 'S', 'E', 'I', 'R', 'u', 'cost']


def _make_dirs(path):
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)


def report_to_dict(report):
    return dict(
        arm=report.arm,
        seed=report.seed,
        best_objective_full=report.best_objective_full,
        best_objective_reduced=report.best_objective_reduced,
        best_reduced=report.best_reduced.tolist(),
        best_full=report.best_full.tolist(),
        wall_time=report.wall_time,
        trace=[dict(iteration=r.iteration,
                    point=r.point.tolist(),
                    objective=r.objective,
                    bandit_won=r.bandit_won,
                    rewards=list(r.rewards),
                    lower=r.lower,
                    upper=r.upper,
                    gp_size=r.gp_size) for r in report.trace],
        config=report.config,
        config_text=report.config_text,
    )


def report_from_dict(data):
    trace = [TraceRecord(r['iteration'], np.array(r['point'], dtype=float), r['objective'], r['bandit_won'],
                         tuple(r['rewards']), r['lower'], r['upper'], r['gp_size']) for r in data['trace']]
    return RunReport(
        best_reduced=np.array(data['best_reduced'], dtype=float),
        best_full=np.array(data['best_full'], dtype=float),
        best_objective_full=data['best_objective_full'],
        best_objective_reduced=data['best_objective_reduced'],
        trace=trace,
        wall_time=data['wall_time'],
        config=data['config'],
        seed=data['seed'],
        arm=data['arm'],
        config_text=data.get('config_text'),
    )


def write_report(report, path):
    _make_dirs(path)
    with open(path, 'w', encoding='utf-8') as file:
        json.dump(report_to_dict(report), file, indent=2)
    return path


def read_report(path):
    with open(path, 'r', encoding='utf-8') as file:
        return report_from_dict(json.load(file))


def write_sweep(rows, path):
    """One line per cell; `rows` are dicts keyed by SWEEP_COLUMNS"""
    _make_dirs(path)
    with open(path, 'w', newline='', encoding='utf-8') as file:
        writer = csv.DictWriter(file, fieldnames=SWEEP_COLUMNS, extrasaction='ignore')
        writer.writeheader()
        for row in rows:
            writer.writerow({key: _format(row.get(key)) for key in SWEEP_COLUMNS})
    return path


def write_trajectory(trajectory, path, accumulated=False):
    """t,S,E,I,R,u,cost; E and R are left empty for SIS"""
    _make_dirs(path)
    columns = TRAJECTORY_COLUMNS + (['accumulated'] if accumulated else [])
    seir = trajectory.states.shape[1] == 4
    totals = trajectory.accumulated
    with open(path, 'w', newline='', encoding='utf-8') as file:
        writer = csv.writer(file)
        writer.writerow(columns)
        for k, t in enumerate(trajectory.epochs):
            state = trajectory.states[k]
            s, e, i, r = state if seir else (state[0], None, state[1], None)
            row = [int(t), s, e, i, r, trajectory.controls[k], trajectory.costs[k]]
            if accumulated:
                row.append(totals[k])
            writer.writerow([_format(x) for x in row])
    return path


def read_control(path):
    """Control values from a text file, one per line or comma separated"""
    with open(path, 'r', encoding='utf-8') as file:
        text = file.read().replace(',', ' ')
    return np.array([float(x) for x in text.split()])


def _format(value):
    if value is None:
        return ''
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return value
