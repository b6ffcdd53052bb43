"""Even dimension reduction over the time grid and the five fill-in strategies.

Epochs are 1-based like the control horizon; arrays are 0-based, so epoch t lives at index t - 1.
A segment starts at a schedule epoch A = q*phi + 1 and ends right before B = (q + 1)*phi + 1, which
belongs to the next segment. Epochs after the last schedule epoch form the trailing segment and
are filled with the last reduced value (GP fill predicts them instead).
"""
import numpy as np
import settings

from dataclasses import dataclass
from typing import Optional, Tuple
from parts import gp_surrogate
from utils.errors import InvalidArgumentError


@dataclass(frozen=True)
class ReductionSchedule:
    t_f: int
    d: int
    phi: int
    epochs: Tuple[int, ...]

    @property
    def indices(self):
        return np.asarray(self.epochs) - 1

    @property
    def spans(self):
        """Epochs covered by each schedule epoch; the last one absorbs the trailing segment"""
        return (self.phi,) * (self.d - 1) + (self.t_f - self.epochs[-1] + 1,)


@dataclass(frozen=True)
class ControlStrategy:
    values: np.ndarray
    bounds: Tuple[float, float] = (settings.LOWER, settings.UPPER)
    schedule: Optional[ReductionSchedule] = None  # None marks a full-horizon control

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float).reshape(-1)
        object.__setattr__(self, 'values', values)
        u_l, u_u = self.bounds
        if np.any(values < u_l) or np.any(values > u_u):
            raise InvalidArgumentError(f'Control values must lie in [{u_l}, {u_u}]')
        if self.schedule is not None and len(values) != self.schedule.d:
            raise InvalidArgumentError(f'Reduced control has {len(values)} values, schedule expects {self.schedule.d}')

    @property
    def is_reduced(self):
        return self.schedule is not None


def make_schedule(t_f, d):
    if t_f < 1 or not 1 <= d <= t_f:
        raise InvalidArgumentError(f'Expected 1 <= d <= t_f, got d={d}, t_f={t_f}')
    phi = t_f // d
    return ReductionSchedule(t_f, d, phi, tuple(q * phi + 1 for q in range(d)))


def to_unit(values, bounds):
    return (np.asarray(values, dtype=float) - bounds[0]) / (bounds[1] - bounds[0])


def _check_reduced(reduced):
    if not reduced.is_reduced:
        raise InvalidArgumentError('Fill-in expects a reduced control strategy')
    return reduced.schedule


def _segments(schedule):
    """(index of A, index of B) for every interior segment"""
    starts = schedule.indices
    return zip(starts[:-1], starts[1:])


def _full(reduced, values):
    return ControlStrategy(np.clip(values, *reduced.bounds), reduced.bounds)


def fill_identical(reduced):
    schedule = _check_reduced(reduced)
    positions = np.minimum(np.arange(schedule.t_f) // schedule.phi, schedule.d - 1)
    return ControlStrategy(reduced.values[positions], reduced.bounds)


def _fill_segments(reduced, interior):
    """Hold-filled vector whose segment interiors are overwritten by `interior(u_a, u_b, size)`"""
    schedule = _check_reduced(reduced)
    full = fill_identical(reduced).values.copy()
    for (a, b), u_a, u_b in zip(_segments(schedule), reduced.values[:-1], reduced.values[1:]):
        if b - a > 1:
            full[a + 1:b] = interior(u_a, u_b, b - a - 1)
    return full


def fill_uniform(reduced, rng):
    full = _fill_segments(reduced, lambda u_a, u_b, size: rng.uniform(min(u_a, u_b), max(u_a, u_b), size))
    return _full(reduced, full)


def fill_linear(reduced):
    phi = _check_reduced(reduced).phi
    full = _fill_segments(reduced, lambda u_a, u_b, size: u_a + np.arange(1, size + 1) * (u_b - u_a) / phi)
    return _full(reduced, full)


def fill_normal(reduced, rng):
    # two-point population std: |u_a - u_b| / 2
    full = _fill_segments(reduced, lambda u_a, u_b, size: rng.normal((u_a + u_b) / 2, abs(u_a - u_b) / 2, size))
    return _full(reduced, full)


def fill_gp(reduced, kernel=None):
    """Fits a 1-D GP over normalized epoch times and predicts the missing epochs.
    The prior mean is the mean of the reduced values; the default length scale spans two schedule steps.
    """
    schedule = _check_reduced(reduced)
    if schedule.d == schedule.t_f:
        return ControlStrategy(reduced.values.copy(), reduced.bounds)

    scale = max(schedule.t_f - 1, 1)
    times = (np.arange(schedule.t_f) / scale)[:, None]
    kernel = kernel or gp_surrogate.KernelParams(length_scale=2 * schedule.phi / scale)
    model = gp_surrogate.fit(times[schedule.indices], reduced.values, float(np.mean(reduced.values)), kernel)
    full, _ = gp_surrogate.posterior_batch(model, times)
    full[schedule.indices] = reduced.values
    return _full(reduced, full)
