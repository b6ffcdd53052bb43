import numpy as np
import settings

from dataclasses import dataclass
from utils.errors import EvaluationError, InvalidArgumentError


@dataclass(frozen=True)
class AdamConfig:
    steps: int = settings.ADAM_STEPS
    learning_rate: float = settings.ADAM_LEARNING_RATE
    beta1: float = settings.ADAM_BETA1
    beta2: float = settings.ADAM_BETA2
    epsilon: float = settings.ADAM_EPSILON
    fd_step: float = settings.FD_STEP

    def __post_init__(self):
        if self.steps < 0:
            raise InvalidArgumentError(f'steps must be nonnegative, got {self.steps}')
        if not self.learning_rate > 0:
            raise InvalidArgumentError(f'learning_rate must be positive, got {self.learning_rate}')
        if not (0 <= self.beta1 < 1 and 0 <= self.beta2 < 1):
            raise InvalidArgumentError('beta1 and beta2 must be in [0, 1)')
        if not (self.epsilon > 0 and self.fd_step > 0):
            raise InvalidArgumentError('epsilon and fd_step must be positive')


def _evaluate(objective, point):
    value = objective(point)
    if not np.isfinite(value):
        raise EvaluationError(f'Objective returned {value}', point=point.copy())
    return float(value)


def fd_gradient(objective, point, fd_step, bounds=None):
    """Central differences, one-sided where the step would leave the box.
    @param objective: callable taking a 1-D array and returning a float.
    @param point: array. Where to estimate the gradient.
    @param fd_step: float. Finite-difference step.
    @param bounds: (lower, upper) or None for an unbounded domain.
    @return: array with the gradient estimate
    """
    point = np.asarray(point, dtype=float)
    lower, upper = bounds if bounds is not None else (-np.inf, np.inf)
    gradient = np.zeros_like(point)
    for i in range(len(point)):
        plus, minus = point.copy(), point.copy()
        plus[i] = min(point[i] + fd_step, upper)
        minus[i] = max(point[i] - fd_step, lower)
        if plus[i] == minus[i]:
            continue
        gradient[i] = (_evaluate(objective, plus) - _evaluate(objective, minus)) / (plus[i] - minus[i])
    return gradient


def adam_search(objective, start, config=None, bounds=(settings.LOWER, settings.UPPER), gradient=None, callback=None):
    """Projected Adam steps from `start`; returns the best iterate visited.
    @param gradient: callable(point) -> array. Defaults to fd_gradient on the objective.
    @param callback: callable(step, point, value) called after every update.
    """
    config = config or AdamConfig()
    if gradient is None:
        def gradient(x):
            return fd_gradient(objective, x, config.fd_step, bounds)

    x = np.clip(np.asarray(start, dtype=float), *bounds)
    best_x, best_value = x.copy(), _evaluate(objective, x)
    m = np.zeros_like(x)
    v = np.zeros_like(x)
    for t in range(1, config.steps + 1):
        g = gradient(x)
        m = config.beta1 * m + (1 - config.beta1) * g
        v = config.beta2 * v + (1 - config.beta2) * g ** 2
        m_hat = m / (1 - config.beta1 ** t)
        v_hat = v / (1 - config.beta2 ** t)
        x = np.clip(x - config.learning_rate * m_hat / (np.sqrt(v_hat) + config.epsilon), *bounds)

        value = _evaluate(objective, x)
        if value < best_value:
            best_x, best_value = x.copy(), value
        if callback is not None:
            callback(t, x, value)

    return best_x
