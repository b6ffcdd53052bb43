"""DR-DF Bayesian optimization loop and the standard-BO comparison arm.

Every random draw comes from a generator seeded by (seed, stream, index) so a run is reproducible from its
seed alone, whatever order the pieces are computed in.
"""
import time
import numpy as np
import settings

from dataclasses import asdict, dataclass, field, replace
from typing import List, Optional, Tuple
from models import epidemic
from parts import dimension, gp_surrogate, local_search, sampling
from parts.acquisition import AcquisitionParams, lcb_batch
from utils import summary
from utils.errors import EvaluationError, InvalidArgumentError

FILL_STRATEGIES = tuple(settings.FILL_STRATEGIES)

# random streams
SAMPLING, INIT, NOISE, ADAM, FILL, FINAL = range(6)

DUPLICATE_TOL = 1e-9


def stream(seed, *keys):
    return np.random.default_rng(np.random.SeedSequence([seed, *keys]))


@dataclass(frozen=True)
class OptimizerConfig:
    instance: epidemic.EpidemicInstance
    d: int = settings.D
    iterations: int = settings.ITERATIONS
    n_zones: int = settings.N_ZONES
    m_points: int = settings.M_POINTS
    n_random: int = settings.N_RANDOM
    acquisition: AcquisitionParams = field(default_factory=AcquisitionParams)
    kernel: gp_surrogate.KernelParams = field(default_factory=gp_surrogate.KernelParams)
    adam: local_search.AdamConfig = field(default_factory=local_search.AdamConfig)
    fill_strategy: str = settings.FILL
    n_init: int = settings.N_INIT
    seed: int = settings.SEED
    shrink_lower: float = settings.SHRINK_LOWER
    shrink_upper: float = settings.SHRINK_UPPER
    adaptive_shrink: bool = settings.ADAPTIVE_SHRINK
    prior_mean: float = settings.PRIOR_MEAN

    def __post_init__(self):
        t_f = self.instance.objective.t_f
        if not 1 <= self.d <= t_f:
            raise InvalidArgumentError(f'Expected 1 <= d <= {t_f}, got {self.d}')
        if self.iterations < 1:
            raise InvalidArgumentError(f'iterations must be positive, got {self.iterations}')
        if self.n_init < 2:
            raise InvalidArgumentError(f'n_init must be at least 2, got {self.n_init}')
        if self.fill_strategy not in FILL_STRATEGIES:
            raise InvalidArgumentError(f'Unknown fill strategy {self.fill_strategy}, available: {FILL_STRATEGIES}')
        if self.n_zones < 1 or self.m_points < 0 or self.n_random < 0:
            raise InvalidArgumentError('n_zones must be positive, m_points and n_random nonnegative')
        if self.n_zones * self.m_points + self.n_random == 0:
            raise InvalidArgumentError('The sampler would not produce any candidate')

    def echo(self):
        """JSON-native view of the configuration for reports"""
        return _plain(asdict(self))


def _plain(value):
    if isinstance(value, dict):
        return {key: _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    return value


@dataclass
class TraceRecord:
    iteration: int
    point: np.ndarray
    objective: float
    bandit_won: bool
    rewards: Tuple[int, ...]
    lower: float
    upper: float
    gp_size: int


@dataclass
class RunReport:
    best_reduced: np.ndarray
    best_full: np.ndarray
    best_objective_full: float
    best_objective_reduced: float
    trace: List[TraceRecord]
    wall_time: float
    config: dict
    seed: int
    arm: str = 'drdf'
    config_text: Optional[str] = None

    @property
    def aofv(self):
        return self.best_objective_full


def fill(reduced, strategy, rng=None):
    if strategy == 'identical':
        return dimension.fill_identical(reduced)
    elif strategy == 'uniform':
        return dimension.fill_uniform(reduced, rng)
    elif strategy == 'linear':
        return dimension.fill_linear(reduced)
    elif strategy == 'normal':
        return dimension.fill_normal(reduced, rng)
    elif strategy == 'gp':
        return dimension.fill_gp(reduced)
    raise InvalidArgumentError(f'Unknown fill strategy {strategy}')


def _standardize(y):
    scale = np.std(y)
    return (y - np.mean(y)) / (scale if scale > 0 else 1.0)


def _score(candidates, model, bounds, params):
    if not candidates:
        return
    points = dimension.to_unit(np.array([c.point for c in candidates]), bounds)
    means, variances = gp_surrogate.posterior_batch(model, points)
    for candidate, value in zip(candidates, lcb_batch(means, variances, params)):
        candidate.acq_value = float(value)


def _best(candidates):
    if not candidates:
        return None
    best = candidates[sampling.extremes(candidates)[0]]
    return best.point, best.acq_value


class _Loop:
    """Candidate sampling, GP fits and evaluations over a fixed schedule"""

    def __init__(self, config, schedule, bandit=True):
        self.config = config
        self.schedule = schedule
        self.bandit = bandit
        self.instance = config.instance
        self.bounds = self.instance.objective.bounds

        self.zones = sampling.make_zones(config.n_zones, config.m_points, self.bounds)
        n_random = config.n_random if bandit else config.n_random + config.n_zones * config.m_points
        self.search = sampling.make_random_search(
            self.bounds,
            shrink_lower=config.shrink_lower if bandit else 0.0,
            shrink_upper=config.shrink_upper if bandit else 0.0,
            n_random=n_random,
            adaptive=config.adaptive_shrink,
        )
        self.points = []
        self.values = []
        self.trace = []

    def evaluate(self, point, index):
        value = epidemic.evaluate_reduced(self.instance, point, self.schedule, stream(self.config.seed, NOISE, index))
        if not np.isfinite(value):
            raise EvaluationError(f'Objective returned {value} at evaluation {index}: {point.tolist()}', point=point)
        return value

    def initialize(self):
        rng = stream(self.config.seed, INIT)
        for point in rng.uniform(*self.bounds, size=(self.config.n_init, self.schedule.d)):
            self.points.append(point)
            self.values.append(self.evaluate(point, len(self.values)))

    def fit(self):
        x = dimension.to_unit(np.array(self.points), self.bounds)
        y = _standardize(np.array(self.values))
        return gp_surrogate.fit(x, y, self.config.prior_mean, self.config.kernel)

    def step(self, iteration):
        config = self.config
        rng = stream(config.seed, SAMPLING, iteration)
        model = self.fit()

        bandit = sampling.sample_bandit(self.zones, self.schedule.d, rng) if self.bandit else []
        random = sampling.sample_random(self.search, self.schedule.d, rng)
        _score(bandit, model, self.bounds, config.acquisition)
        _score(random, model, self.bounds, config.acquisition)

        point, bandit_won = sampling.select_winner(_best(bandit), _best(random))
        if bandit:
            best, worst = sampling.extremes(bandit)
            self.zones = sampling.update_rewards(self.zones, bandit[best].zone, bandit[worst].zone)
            self.search = sampling.shrink_bounds(self.search, bandit_won, bandit[best].point)

        point = self._deduplicate(point, rng)
        value = self.evaluate(point, len(self.values))
        self.points.append(point)
        self.values.append(value)

        record = TraceRecord(iteration, point, value, bandit_won, self.zones.rewards,
                             self.search.lower, self.search.upper, model.size)
        self.trace.append(record)
        return record

    def _deduplicate(self, point, rng):
        distances = np.linalg.norm(np.array(self.points) - point, axis=1)
        if distances.min() < DUPLICATE_TOL:
            point = np.clip(point + rng.normal(0.0, 1e-6, size=point.shape), *self.bounds)
        return point

    def run(self):
        self.initialize()
        best_so_far = min(self.values)
        for iteration in range(self.config.iterations):
            record = self.step(iteration)
            best_so_far = min(best_so_far, record.objective)
            summary.write(dict(objective=record.objective,
                               best_objective=best_so_far,
                               bandit_won=float(record.bandit_won),
                               lower=record.lower,
                               upper=record.upper,
                               gp_size=record.gp_size),
                          step=iteration, name='loop')
            if self.bandit:
                summary.write(dict(rewards=record.rewards), step=iteration, name='zones', dtype='histogram')

        # ties go to the earliest evaluation
        best = int(np.argmin(self.values))
        return self.points[best], self.values[best]


def run(config, log_dir=None):
    """Reduce, loop, refine with Adam, fill in and evaluate on the full horizon"""
    start = time.perf_counter()
    instance = config.instance
    bounds = instance.objective.bounds
    schedule = dimension.make_schedule(instance.objective.t_f, config.d)

    with summary.writer(log_dir):
        loop = _Loop(config, schedule)
        best_point, _ = loop.run()

        def objective(x):
            return epidemic.evaluate_reduced(instance, x, schedule, stream(config.seed, ADAM))

        def log_adam(step, x, value):
            summary.write(dict(objective=value), step=step, name='adam')

        refined = local_search.adam_search(objective, best_point, config.adam, bounds, callback=log_adam)
        refined_value = objective(refined)

        reduced = dimension.ControlStrategy(refined, bounds, schedule)
        full = fill(reduced, config.fill_strategy, stream(config.seed, FILL))
        objective_full = epidemic.evaluate_full(instance, full, stream(config.seed, FINAL))
        summary.write(dict(best_objective_full=objective_full), step=config.iterations, name='final')

    return RunReport(
        best_reduced=refined,
        best_full=full.values,
        best_objective_full=objective_full,
        best_objective_reduced=refined_value,
        trace=loop.trace,
        wall_time=time.perf_counter() - start,
        config=config.echo(),
        seed=config.seed,
    )


def run_baseline_standard_bo(config, log_dir=None):
    """Same loop on the full horizon with pure random search, no Adam stage and no fill-in"""
    start = time.perf_counter()
    instance = config.instance
    config = replace(config, d=instance.objective.t_f)
    schedule = dimension.make_schedule(instance.objective.t_f, config.d)

    with summary.writer(log_dir):
        loop = _Loop(config, schedule, bandit=False)
        best_point, best_value = loop.run()
        objective_full = epidemic.evaluate_full(instance, best_point, stream(config.seed, FINAL))
        summary.write(dict(best_objective_full=objective_full), step=config.iterations, name='final')

    return RunReport(
        best_reduced=best_point,
        best_full=best_point.copy(),
        best_objective_full=objective_full,
        best_objective_reduced=best_value,
        trace=loop.trace,
        wall_time=time.perf_counter() - start,
        config=config.echo(),
        seed=config.seed,
        arm='baseline',
    )
