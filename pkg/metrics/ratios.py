from utils.errors import InvalidArgumentError


def _ratio(value, reference, name):
    if not reference > 0:
        raise InvalidArgumentError(f'{name} reference must be positive, got {reference}')
    return value / reference


def aofv_ratio(aofv_d, aofv_ref):
    """AOFV(d) / AOFV(reference d); lower is better"""
    return _ratio(aofv_d, aofv_ref, 'AOFV')


def rt_ratio(rt_d, rt_ref):
    """RT(d) / RT(reference d) in wall-clock seconds"""
    return _ratio(rt_d, rt_ref, 'RT')
