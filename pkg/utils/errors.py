class Error(Exception):
    pass


class InvalidArgumentError(Error, ValueError):
    """Raised when an argument breaks the contract of an operation"""
    pass


class SingularKernelError(Error):
    """Raised when the kernel matrix cannot be factorized even with the largest jitter.
    Usually a sign of duplicated points with incompatible observations."""
    pass


class EvaluationError(Error):
    """Raised when the objective returns a non-finite value"""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class ConfigError(Error):
    pass
