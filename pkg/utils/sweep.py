import time
import numpy as np

from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence
from metrics.ratios import aofv_ratio, rt_ratio
from models import optimizer
from utils.errors import InvalidArgumentError

BASELINE = 'baseline'


@dataclass(frozen=True)
class SweepSpec:
    base: optimizer.OptimizerConfig
    d_values: Sequence[int]
    fill_strategies: Sequence[str]
    seeds: Sequence[int]
    reference_d: Optional[int] = None  # t_f when unset
    baseline: bool = False
    iterations_values: Sequence[int] = ()  # base.iterations when empty

    def __post_init__(self):
        t_f = self.base.instance.objective.t_f
        if self.reference_d is None:
            object.__setattr__(self, 'reference_d', t_f)
        if not self.iterations_values:
            object.__setattr__(self, 'iterations_values', (self.base.iterations,))
        if not (self.d_values and self.fill_strategies and self.seeds):
            raise InvalidArgumentError('d_values, fill_strategies and seeds must not be empty')
        for d in self.d_values:
            if not 1 <= d <= t_f:
                raise InvalidArgumentError(f'd = {d} is outside [1, {t_f}]')
        if self.reference_d not in self.d_values:
            raise InvalidArgumentError(f'reference_d {self.reference_d} must be one of d_values {list(self.d_values)}')
        for iterations in self.iterations_values:
            if iterations < 1:
                raise InvalidArgumentError(f'iterations must be positive, got {iterations}')
        for fill in self.fill_strategies:
            if fill not in optimizer.FILL_STRATEGIES:
                raise InvalidArgumentError(f'Unknown fill strategy {fill}')


@dataclass
class Cell:
    d: int
    fill: str
    seed: int
    iterations: int
    report: Optional[optimizer.RunReport] = None
    rt_seconds: float = np.nan
    error: Optional[str] = None
    aofv_ratio: float = np.nan
    rt_ratio: float = np.nan

    @property
    def aofv(self):
        return self.report.best_objective_full if self.report is not None else np.nan

    @property
    def failed(self):
        return self.error is not None

    @property
    def name(self):
        return f'd{self.d}-{self.fill}-it{self.iterations}-seed{self.seed}'


@dataclass
class SweepReport:
    model: str
    cells: List[Cell] = field(default_factory=list)

    @property
    def failures(self):
        return [cell for cell in self.cells if cell.failed]

    def rows(self):
        return [dict(model=self.model, d=cell.d, fill=cell.fill, seed=cell.seed, aofv=cell.aofv,
                     rt_seconds=cell.rt_seconds, aofv_ratio=cell.aofv_ratio, rt_ratio=cell.rt_ratio,
                     iterations=cell.iterations)
                for cell in self.cells]


def _run_cell(cell, config, on_cell=None):
    try:
        run = optimizer.run_baseline_standard_bo if cell.fill == BASELINE else optimizer.run
        start = time.perf_counter()
        cell.report = run(config)
        cell.rt_seconds = time.perf_counter() - start
    except Exception as e:  # a failing cell must not stop the sweep
        cell.error = f'{type(e).__name__}: {e}'
    if on_cell is not None:
        on_cell(cell)
    return cell


def _ratios(cells, reference_d, first_fill):
    references = {(c.fill, c.iterations, c.seed): c for c in cells if c.d == reference_d and c.fill != BASELINE}
    for cell in cells:
        fill = first_fill if cell.fill == BASELINE else cell.fill
        reference = references.get((fill, cell.iterations, cell.seed))
        if cell.failed or reference is None or reference.failed:
            continue
        # a zero reference AOFV (no infection cost, zero control) leaves the ratio undefined
        if reference.aofv > 0:
            cell.aofv_ratio = aofv_ratio(cell.aofv, reference.aofv)
        cell.rt_ratio = rt_ratio(cell.rt_seconds, reference.rt_seconds)


def sweep(spec, on_cell=None):
    """Runs every (d, fill, iterations, seed) cell; failed cells are recorded and the sweep goes on.
    Cells come back ordered by (d, fill, iterations, seed); baseline cells use d = t_f and are compared
    against the reference cell of the first fill strategy with the same iteration budget.
    """
    t_f = spec.base.instance.objective.t_f
    budgets = sorted(set(spec.iterations_values))
    seeds = sorted(set(spec.seeds))
    cells = [Cell(d, fill, seed, iterations)
             for d in sorted(set(spec.d_values))
             for fill in sorted(set(spec.fill_strategies))
             for iterations in budgets
             for seed in seeds]
    if spec.baseline:
        cells += [Cell(t_f, BASELINE, seed, iterations) for iterations in budgets for seed in seeds]

    for cell in cells:
        fill = spec.base.fill_strategy if cell.fill == BASELINE else cell.fill
        config = replace(spec.base, d=cell.d, seed=cell.seed, iterations=cell.iterations, fill_strategy=fill)
        _run_cell(cell, config, on_cell)

    cells.sort(key=lambda c: (c.d, c.fill, c.iterations, c.seed))
    _ratios(cells, spec.reference_d, sorted(set(spec.fill_strategies))[0])
    return SweepReport(spec.base.instance.kind, cells)


def _select(report, d, fill, iterations):
    return [c for c in report.cells
            if c.d == d and (fill is None or c.fill == fill) and c.fill != BASELINE
            and (iterations is None or c.iterations == iterations) and not c.failed]


def median_aofv_ratio(report, d, fill=None, iterations=None):
    values = [c.aofv_ratio for c in _select(report, d, fill, iterations)]
    return float(np.median(values)) if values else np.nan


def median_rt_ratio(report, d, fill=None, iterations=None):
    values = [c.rt_ratio for c in _select(report, d, fill, iterations)]
    return float(np.median(values)) if values else np.nan


def median_aofv(report, iterations=None, baseline=False):
    """Median best AOFV over the baseline cells, or over all other cells, of one iteration budget"""
    values = [c.aofv for c in report.cells
              if (c.fill == BASELINE) == baseline and (iterations is None or c.iterations == iterations)
              and not c.failed]
    return float(np.median(values)) if values else np.nan
