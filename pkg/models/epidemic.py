"""SEIR and SIS epidemic models with a time-varying control and their accumulated objective.

Every epoch t = 1..t_f contributes C1 * I(t) + C2 * f(u(t)) to the objective, with I(t) the state at
the start of the epoch; the state then advances over the epoch with u(t) held constant.
"""
import math
import numpy as np
import settings

from dataclasses import dataclass, field
from typing import NamedTuple, Tuple, Union
from utils.errors import InvalidArgumentError

SEIR = 'seir'
SIS = 'sis'


@dataclass(frozen=True)
class SeirParams:
    tau: float = settings.SEIR_TAU
    beta: float = settings.SEIR_BETA
    alpha_rate: float = settings.SEIR_ALPHA
    gamma: float = settings.SEIR_GAMMA

    def __post_init__(self):
        for name in ('tau', 'beta', 'alpha_rate', 'gamma'):
            if not 0 <= getattr(self, name) <= 1:
                raise InvalidArgumentError(f'{name} must be in [0, 1], got {getattr(self, name)}')


@dataclass(frozen=True)
class SisParams:
    tau: float = settings.SIS_TAU
    beta: float = settings.SIS_BETA
    gamma: float = settings.SIS_GAMMA
    sigma: float = settings.SIS_SIGMA

    def __post_init__(self):
        for name in ('tau', 'beta', 'gamma'):
            if not 0 <= getattr(self, name) <= 1:
                raise InvalidArgumentError(f'{name} must be in [0, 1], got {getattr(self, name)}')
        if self.sigma < 0:
            raise InvalidArgumentError(f'sigma must be nonnegative, got {self.sigma}')


class SeirState(NamedTuple):
    S: float
    E: float
    I: float
    R: float


class SisState(NamedTuple):
    S: float
    I: float


@dataclass(frozen=True)
class ObjectiveParams:
    c1: float = settings.C1
    c2: float = settings.C2
    t_f: int = settings.SEIR_T_F
    bounds: Tuple[float, float] = (settings.LOWER, settings.UPPER)
    t0: int = 1

    def __post_init__(self):
        if self.c1 < 0 or self.c2 < 0:
            raise InvalidArgumentError('c1 and c2 must be nonnegative')
        if self.t0 != 1:
            raise InvalidArgumentError('The horizon always starts at t0 = 1')
        if self.t_f < 1:
            raise InvalidArgumentError(f't_f must be positive, got {self.t_f}')
        if not self.bounds[0] < self.bounds[1]:
            raise InvalidArgumentError(f'Invalid control bounds {self.bounds}')


@dataclass(frozen=True)
class EpidemicInstance:
    kind: str
    params: Union[SeirParams, SisParams]
    initial_state: Union[SeirState, SisState]
    objective: ObjectiveParams = field(default_factory=ObjectiveParams)
    step_size: float = settings.STEP_SIZE
    literal_recovery: bool = False  # dR/dt = I - tau*R + u*I, the population total drifts

    def __post_init__(self):
        expected = {SEIR: (SeirParams, SeirState), SIS: (SisParams, SisState)}
        if self.kind not in expected:
            raise InvalidArgumentError(f'Unknown model {self.kind}')
        params_type, state_type = expected[self.kind]
        if not isinstance(self.params, params_type):
            raise InvalidArgumentError(f'{self.kind} expects {params_type.__name__}')
        state = state_type(*(float(x) for x in self.initial_state))
        object.__setattr__(self, 'initial_state', state)
        if min(state) < 0 or abs(sum(state) - 1) > 1e-9:
            raise InvalidArgumentError(f'Initial state {state} is not on the simplex')
        if not 0 < self.step_size <= 1 or abs(1 / self.step_size - round(1 / self.step_size)) > 1e-9:
            raise InvalidArgumentError(f'1 / step_size must be a positive integer, got step_size={self.step_size}')

    @property
    def substeps(self):
        return int(round(1 / self.step_size))

    @property
    def columns(self):
        return SeirState._fields if self.kind == SEIR else SisState._fields


@dataclass(frozen=True)
class Trajectory:
    """States at the start of every epoch, the control applied and the epoch cost"""
    epochs: np.ndarray
    states: np.ndarray
    controls: np.ndarray
    costs: np.ndarray

    @property
    def aofv(self):
        return _accumulate(self.costs)

    @property
    def accumulated(self):
        return np.cumsum(self.costs)

    @property
    def infectious(self):
        # I is the second to last column of SEIR and the last of SIS
        return self.states[:, 2] if self.states.shape[1] == 4 else self.states[:, 1]


def control_cost(u):
    return 0.3 * np.abs(np.sin(10 * u)) + 2.1 * np.abs(np.sin(u)) + u ** 2


def _project(values):
    values = [max(x, 0.0) for x in values]
    total = sum(values)
    if total != 1.0:
        values = [x / total for x in values]
    return values


def seir_step(state, u_t, params, h, literal_recovery=False):
    s, e, i, r = state
    infection = params.beta * s * i
    ds = params.tau - infection - params.tau * s
    de = infection - (params.tau + params.alpha_rate) * e
    di = params.alpha_rate * e - (params.tau + params.gamma) * i - u_t * i
    recovered = i if literal_recovery else params.gamma * i
    dr = recovered - params.tau * r + u_t * i

    stepped = (s + h * ds, e + h * de, i + h * di, r + h * dr)
    if literal_recovery:
        return SeirState(*(max(x, 0.0) for x in stepped))
    return SeirState(*_project(stepped))


def sis_step(state, u_t, params, h, d_b):
    """One Euler-Maruyama step; `d_b` is a Normal(0, h) Brownian increment.
    If the step would take a positive I to zero or below (coarse grids, h of several epochs), I takes the
    log-Euler step of dI = I*(a dt + sigma*S dB) instead and stays positive.
    """
    s, i = state
    growth = params.beta * s - (params.tau + params.gamma) - u_t
    drift = growth * i
    diffusion = params.sigma * s * i * d_b
    i_euler = i + h * drift + diffusion
    if i > 0 and i_euler <= 0:
        volatility = params.sigma * s
        i_next = i * math.exp(h * growth - 0.5 * volatility ** 2 * h + volatility * d_b)
        return SisState(1.0 - i_next, i_next)

    # dS/dt = tau - beta*S*I + gamma*I - tau*S + u*I mirrors dI/dt whenever S + I = 1
    ds = params.tau - params.beta * s * i + params.gamma * i - params.tau * s + u_t * i
    s_next = max(s + h * ds - diffusion, 0.0)
    i_next = max(i_euler, 0.0)
    i_next = min(i_next / (s_next + i_next), 1.0)
    return SisState(1.0 - i_next, i_next)


def _accumulate(costs):
    total = 0.0
    for cost in costs:
        total += cost
    return total


def _integrate(instance, values, spans, noise=None, record=True):
    """Steps the model over consecutive blocks of `spans` epochs with control `values[k]` held per block.
    The block cost is weighted by its span. Returns (states, costs)."""
    obj = instance.objective
    params = instance.params
    values = np.asarray(values, dtype=float)
    f_u = control_cost(values)
    substeps = instance.substeps

    state = instance.initial_state
    states, costs = [], []
    for u_t, f_t, span in zip(values.tolist(), f_u.tolist(), spans):
        if record:
            states.append(state)
        costs.append(span * (obj.c1 * state.I + obj.c2 * f_t))
        h = span / substeps
        for _ in range(substeps):
            if instance.kind == SEIR:
                state = seir_step(state, u_t, params, h, instance.literal_recovery)
            else:
                d_b = noise.normal(0.0, math.sqrt(h)) if noise is not None else 0.0
                state = sis_step(state, u_t, params, h, d_b)
    return states, costs


def _control_values(control, t_f):
    values = np.asarray(getattr(control, 'values', control), dtype=float).reshape(-1)
    if len(values) != t_f:
        raise InvalidArgumentError(f'Control has {len(values)} values, the horizon is {t_f}')
    return values


def simulate(instance, control, noise=None):
    """Full-horizon trajectory.
    @param control: ControlStrategy or array with t_f values.
    @param noise: np.random.Generator drawing the SIS Brownian increments; without it the SIS drift is integrated.
    @return: Trajectory
    """
    t_f = instance.objective.t_f
    values = _control_values(control, t_f)
    states, costs = _integrate(instance, values, [1] * t_f, noise)
    return Trajectory(np.arange(1, t_f + 1), np.array(states), values, np.array(costs))


def evaluate_full(instance, control, noise=None):
    values = _control_values(control, instance.objective.t_f)
    _, costs = _integrate(instance, values, [1] * len(values), noise, record=False)
    return _accumulate(costs)


def evaluate_reduced(instance, reduced, schedule, noise=None):
    """Objective on the coarse grid of the schedule epochs, one block of phi epochs per value"""
    if schedule.t_f != instance.objective.t_f:
        raise InvalidArgumentError(f'Schedule horizon {schedule.t_f} does not match {instance.objective.t_f}')
    values = np.asarray(getattr(reduced, 'values', reduced), dtype=float).reshape(-1)
    if len(values) != schedule.d:
        raise InvalidArgumentError(f'Reduced control has {len(values)} values, schedule expects {schedule.d}')
    _, costs = _integrate(instance, values, schedule.spans, noise, record=False)
    return _accumulate(costs)


def make_instance(kind=SEIR, t_f=None, **kwargs):
    """Instance with settings defaults; keyword arguments override single parameters"""
    pick = kwargs.pop
    bounds = (pick('lower', settings.LOWER), pick('upper', settings.UPPER))
    if kind == SEIR:
        params = SeirParams(pick('tau', settings.SEIR_TAU), pick('beta', settings.SEIR_BETA),
                            pick('alpha', settings.SEIR_ALPHA), pick('gamma', settings.SEIR_GAMMA))
        state = SeirState(pick('s0', settings.SEIR_S0), pick('e0', settings.SEIR_E0),
                          pick('i0', settings.SEIR_I0), pick('r0', settings.SEIR_R0))
        t_f = t_f or settings.SEIR_T_F
    elif kind == SIS:
        params = SisParams(pick('tau', settings.SIS_TAU), pick('beta', settings.SIS_BETA),
                           pick('gamma', settings.SIS_GAMMA), pick('sigma', settings.SIS_SIGMA))
        state = SisState(pick('s0', settings.SIS_S0), pick('i0', settings.SIS_I0))
        t_f = t_f or settings.SIS_T_F
    else:
        raise InvalidArgumentError(f'Unknown model {kind}')

    objective = ObjectiveParams(pick('c1', settings.C1), pick('c2', settings.C2), t_f, bounds)
    step_size = pick('step_size', settings.STEP_SIZE)
    literal_recovery = pick('literal_recovery', False)
    if kwargs:
        raise InvalidArgumentError(f'Unknown {kind} parameters: {sorted(kwargs)}')
    return EpidemicInstance(kind, params, state, objective, step_size, literal_recovery)
