import numpy as np
import settings

from dataclasses import dataclass, replace
from typing import Optional, Tuple
from utils.errors import InvalidArgumentError


@dataclass(frozen=True)
class ZoneState:
    """Bandit zones over [u_l, u_u]; rewards[i] is how many points zone i gets next iteration"""
    n_zones: int
    zone_edges: Tuple[float, ...]
    rewards: Tuple[int, ...]

    def __post_init__(self):
        if self.n_zones < 1:
            raise InvalidArgumentError(f'n_zones must be positive, got {self.n_zones}')
        if len(self.zone_edges) != self.n_zones + 1 or len(self.rewards) != self.n_zones:
            raise InvalidArgumentError('zone_edges must have n + 1 entries and rewards n entries')
        if any(r < 0 for r in self.rewards):
            raise InvalidArgumentError(f'rewards must be nonnegative, got {self.rewards}')

    def interval(self, zone):
        return self.zone_edges[zone], self.zone_edges[zone + 1]


@dataclass(frozen=True)
class RandomSearchState:
    lower: float
    upper: float
    bounds: Tuple[float, float] = (settings.LOWER, settings.UPPER)
    shrink_lower: float = settings.SHRINK_LOWER
    shrink_upper: float = settings.SHRINK_UPPER
    n_random: int = settings.N_RANDOM
    adaptive: bool = settings.ADAPTIVE_SHRINK

    def __post_init__(self):
        u_l, u_u = self.bounds
        if not u_l <= self.lower < self.upper <= u_u:
            raise InvalidArgumentError(f'Expected {u_l} <= lower < upper <= {u_u}, got ({self.lower}, {self.upper})')
        if self.shrink_lower < 0 or self.shrink_upper < 0:
            raise InvalidArgumentError('shrink constants must be nonnegative')
        if self.n_random < 0:
            raise InvalidArgumentError(f'n_random must be nonnegative, got {self.n_random}')


@dataclass
class Candidate:
    point: np.ndarray
    acq_value: float = np.nan
    zone: Optional[int] = None  # None for random-search candidates


def make_zones(n_zones=settings.N_ZONES, m_points=settings.M_POINTS, bounds=(settings.LOWER, settings.UPPER)):
    edges = np.linspace(bounds[0], bounds[1], n_zones + 1)
    edges[0], edges[-1] = bounds
    return ZoneState(n_zones, tuple(float(e) for e in edges), (m_points,) * n_zones)


def make_random_search(bounds=(settings.LOWER, settings.UPPER), **kwargs):
    return RandomSearchState(lower=bounds[0], upper=bounds[1], bounds=tuple(bounds), **kwargs)


def sample_bandit(zones, d, rng):
    if d < 1:
        raise InvalidArgumentError(f'd must be positive, got {d}')
    candidates = []
    for zone, reward in enumerate(zones.rewards):
        low, high = zones.interval(zone)
        # every coordinate comes from the same zone, so the point belongs to that zone
        for point in rng.uniform(low, high, size=(reward, d)):
            candidates.append(Candidate(point, zone=zone))
    return candidates


def update_rewards(zones, best_zone, worst_zone):
    for zone in (best_zone, worst_zone):
        if not 0 <= zone < zones.n_zones:
            raise InvalidArgumentError(f'Zone index {zone} out of range')
    if best_zone == worst_zone or zones.rewards[worst_zone] == 0:
        return zones
    rewards = list(zones.rewards)
    rewards[best_zone] += 1
    rewards[worst_zone] -= 1
    return replace(zones, rewards=tuple(rewards))


def sample_random(state, d, rng):
    if d < 1:
        raise InvalidArgumentError(f'd must be positive, got {d}')
    points = rng.uniform(state.lower, state.upper, size=(state.n_random, d))
    # uniform can round up to `upper` on tiny intervals
    points = np.clip(points, state.lower, state.upper)
    return [Candidate(point) for point in points]


def extremes(candidates):
    """Indices of the candidates with the smallest and largest acquisition values"""
    values = np.array([c.acq_value for c in candidates])
    return int(np.argmin(values)), int(np.argmax(values))


def select_winner(best_bandit, best_random):
    """Pick between the best bandit and best random (point, acquisition value) pairs; ties go to the random search.
    Either side may be None when it produced no candidates.
    @return: (point, bandit_won)
    """
    if best_random is None:
        return best_bandit[0], True
    if best_bandit is None:
        return best_random[0], False
    if best_bandit[1] < best_random[1]:
        return best_bandit[0], True
    return best_random[0], False


def shrink_bounds(state, bandit_won, best_point=None):
    if not bandit_won:
        return state

    shrink_lower, shrink_upper = state.shrink_lower, state.shrink_upper
    if state.adaptive and best_point is not None:
        center = float(np.mean(best_point))
        if center - state.lower < state.upper - center:
            shrink_lower = 0.0
        else:
            shrink_upper = 0.0

    lower, upper = state.lower + shrink_lower, state.upper - shrink_upper
    u_l, u_u = state.bounds
    if not u_l <= lower < upper <= u_u:
        return state
    return replace(state, lower=lower, upper=upper)
