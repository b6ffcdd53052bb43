import contextlib
import os
import numpy as np
import tensorflow as tf

from datetime import datetime


def log_path(log_dir, model, command, run_name):
    time = datetime.now().strftime('%Y%m%d-%H%M%S')
    if not os.path.isabs(log_dir):
        log_dir = os.path.abspath(log_dir)
    return os.path.join(log_dir, model, command, run_name, time)


def writer(path=None):
    """Default-writer context for `write`; without a path the writes are dropped"""
    if path is None:
        return contextlib.nullcontext()
    return tf.summary.create_file_writer(path).as_default()


def write(metrics_dict, step=None, name='summary', dtype='scalar'):
    with tf.name_scope(name):
        if dtype == 'histogram':
            w_func = tf.summary.histogram
        else:
            w_func = tf.summary.scalar
        for tag, data in metrics_dict.items():
            w_func(tag, np.asarray(data, dtype=np.float64), step=step)
