import settings

from models import epidemic
from models.optimizer import OptimizerConfig
from parts.acquisition import AcquisitionParams
from parts.gp_surrogate import KernelParams
from parts.local_search import AdamConfig
from utils.errors import InvalidArgumentError

INSTANCE_KEYS = ['tau', 'beta', 'alpha', 'gamma', 'sigma', 's0', 'e0', 'i0', 'r0', 'c1', 'c2', 'lower', 'upper',
                 'step_size', 'literal_recovery']
LOOP_KEYS = ['d', 'iterations', 'n_init', 'seed', 'n_zones', 'm_points', 'n_random', 'shrink_lower', 'shrink_upper',
             'adaptive_shrink', 'prior_mean']
ADAM_KEYS = {'adam_steps': 'steps', 'learning_rate': 'learning_rate', 'beta1': 'beta1', 'beta2': 'beta2',
             'epsilon': 'epsilon', 'fd_step': 'fd_step'}


def get_instance(name, t_f=None, **params):
    if name.lower() == 'seir':
        return epidemic.make_instance(epidemic.SEIR, t_f, **params)
    elif name.lower() == 'sis':
        return epidemic.make_instance(epidemic.SIS, t_f, **params)
    else:
        raise InvalidArgumentError(f'Model {name} not supported. Available: seir, sis')


def get_config(options):
    """OptimizerConfig from a flat option dict (config file keys); missing keys keep the settings defaults"""
    options = dict(options)
    model = options.pop('model', settings.MODEL)
    instance_params = {key: options.pop(key) for key in INSTANCE_KEYS if key in options}
    instance = get_instance(model, options.pop('t_f', None), **instance_params)

    kwargs = {key: options.pop(key) for key in LOOP_KEYS if key in options}
    if 'fill' in options:
        kwargs['fill_strategy'] = options.pop('fill')
    if 'k_weight' in options:
        kwargs['acquisition'] = AcquisitionParams(options.pop('k_weight'))
    kernel = {key: options.pop(key) for key in ('length_scale', 'jitter') if key in options}
    if kernel:
        kwargs['kernel'] = KernelParams(**kernel)
    adam = {field: options.pop(key) for key, field in ADAM_KEYS.items() if key in options}
    if adam:
        kwargs['adam'] = AdamConfig(**adam)

    if options:
        raise InvalidArgumentError(f'Unknown options: {sorted(options)}')
    if 'd' not in kwargs:
        kwargs['d'] = min(instance.objective.t_f, settings.D)
    return OptimizerConfig(instance, **kwargs)
