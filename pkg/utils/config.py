import os
import toml

from utils import selectors
from utils.errors import ConfigError, Error

SWEEP_KEYS = ['d_values', 'fill_strategies', 'seeds', 'reference_d', 'iterations_values']


def load(path):
    """Reads a flat TOML config file of `key = value` lines.
    @return: (options dict, raw text of the file)
    """
    if not os.path.isabs(path):
        path = os.path.abspath(path)
    try:
        with open(path, 'r', encoding='utf-8') as file:
            text = file.read()
        options = toml.loads(text)
    except OSError as e:
        raise ConfigError(f'Could not read config {path}: {e}') from e
    except toml.TomlDecodeError as e:
        raise ConfigError(f'Could not parse config {path}: {e}; string values must be quoted, e.g. fill = "linear"') from e

    nested = [key for key, value in options.items() if isinstance(value, dict)]
    if nested:
        raise ConfigError(f'Config must be flat, found tables {nested}')
    return options, text


def split_sweep(options):
    """Separates the sweep keys from the run options"""
    options = dict(options)
    sweep = {key: options.pop(key) for key in SWEEP_KEYS if key in options}
    return options, sweep


def build(options):
    """OptimizerConfig from config options; any invalid value becomes a ConfigError"""
    try:
        return selectors.get_config(options)
    except (Error, TypeError, ValueError) as e:
        raise ConfigError(f'Invalid configuration: {e}') from e
