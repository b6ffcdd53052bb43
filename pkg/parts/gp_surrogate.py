import numpy as np
import settings

from dataclasses import dataclass, field, replace
from scipy import linalg
from scipy.spatial.distance import cdist
from utils.errors import InvalidArgumentError, SingularKernelError

SQRT5 = np.sqrt(5.0)


@dataclass(frozen=True)
class KernelParams:
    length_scale: float = settings.LENGTH_SCALE
    jitter: float = settings.JITTER

    def __post_init__(self):
        if not self.length_scale > 0:
            raise InvalidArgumentError(f'length_scale must be positive, got {self.length_scale}')
        if not 0 < self.jitter <= settings.MAX_JITTER:
            raise InvalidArgumentError(f'jitter must be in (0, {settings.MAX_JITTER}], got {self.jitter}')


@dataclass(frozen=True)
class GpModel:
    """Fitted GP. `kernel.jitter` is the jitter the factorization actually needed."""
    points: np.ndarray
    observations: np.ndarray
    prior_mean: float
    kernel: KernelParams
    chol: np.ndarray = field(repr=False)
    alpha: np.ndarray = field(repr=False)

    @property
    def size(self):
        return len(self.observations)

    @property
    def dim(self):
        return self.points.shape[1] if self.size else None


def _as_vector(x):
    return np.atleast_1d(np.asarray(x, dtype=float))


def _matern52_of_distance(r, length_scale):
    s = SQRT5 * r / length_scale
    return (1 + s + (5. / 3.) * r ** 2 / length_scale ** 2) * np.exp(-s)


def matern52(a, b, params):
    a, b = _as_vector(a), _as_vector(b)
    if a.shape != b.shape:
        raise InvalidArgumentError(f'Dimension mismatch: {a.shape} vs {b.shape}')
    r = np.linalg.norm(a - b)
    return float(_matern52_of_distance(r, params.length_scale))


def gram(x1, x2, params):
    """Matern52 covariance between every row of x1 and every row of x2"""
    return _matern52_of_distance(cdist(x1, x2), params.length_scale)


def fit(points, observations, prior_mean=settings.PRIOR_MEAN, kernel=None):
    """`points` is (n, dim); a flat sequence is read as n points of dimension one"""
    kernel = kernel or KernelParams()
    observations = np.asarray(observations, dtype=float).reshape(-1)
    points = np.asarray(points, dtype=float)
    if points.ndim == 1:
        points = points.reshape(-1, 1)
    if points.ndim != 2:
        raise InvalidArgumentError(f'Expected (n, dim) training points, got shape {points.shape}')
    if len(points) != len(observations):
        raise InvalidArgumentError(f'{len(points)} points but {len(observations)} observations')

    if len(observations) == 0:
        empty = np.zeros((0, 0))
        return GpModel(empty, observations, float(prior_mean), kernel, empty, np.zeros(0))

    if not np.all(np.isfinite(points)):
        raise InvalidArgumentError('Training points must be finite')

    k = gram(points, points, kernel)
    identity = np.eye(len(points))
    jitter = kernel.jitter
    while True:
        try:
            chol = linalg.cholesky(k + jitter * identity, lower=True)
            break
        except linalg.LinAlgError:
            if jitter >= settings.MAX_JITTER:
                raise SingularKernelError(
                    f'Kernel matrix of {len(points)} points is singular even with jitter {jitter}')
            jitter = min(jitter * 10, settings.MAX_JITTER)

    alpha = linalg.cho_solve((chol, True), observations - prior_mean)
    return GpModel(points, observations, float(prior_mean), replace(kernel, jitter=jitter), chol, alpha)


def posterior_batch(model, queries):
    """Posterior mean and clamped variance of every row of `queries`"""
    queries = np.atleast_2d(np.asarray(queries, dtype=float))
    if model.size == 0:
        return np.full(len(queries), model.prior_mean), np.ones(len(queries))
    if queries.shape[1] != model.dim:
        raise InvalidArgumentError(f'Query dimension {queries.shape[1]} does not match model dimension {model.dim}')

    k_star = gram(queries, model.points, model.kernel)
    mean = model.prior_mean + k_star @ model.alpha
    v = linalg.solve_triangular(model.chol, k_star.T, lower=True)
    variance = 1.0 - np.sum(v ** 2, axis=0)
    return mean, np.maximum(variance, 0.0)


def posterior(model, query):
    query = _as_vector(query)
    if model.size == 0:
        return model.prior_mean, 1.0
    mean, variance = posterior_batch(model, query[None, :])
    return float(mean[0]), float(variance[0])
