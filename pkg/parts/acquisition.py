import numpy as np
import settings

from dataclasses import dataclass
from utils.errors import InvalidArgumentError


@dataclass(frozen=True)
class AcquisitionParams:
    k_weight: float = settings.K_WEIGHT

    def __post_init__(self):
        if not self.k_weight >= 0:
            raise InvalidArgumentError(f'k_weight must be nonnegative, got {self.k_weight}')


def lcb(mean, variance, params):
    """Lower confidence bound; lower is better.
    @param mean: float. Posterior mean.
    @param variance: float. Posterior variance, the standard deviation is its square root.
    @param params: AcquisitionParams.
    @return: float. mean - k * std
    """
    if variance < 0:
        raise InvalidArgumentError(f'variance must be nonnegative, got {variance}')
    return mean - params.k_weight * np.sqrt(variance)


def lcb_batch(means, variances, params):
    variances = np.asarray(variances, dtype=float)
    if np.any(variances < 0):
        raise InvalidArgumentError('variances must be nonnegative')
    return np.asarray(means, dtype=float) - params.k_weight * np.sqrt(variances)
