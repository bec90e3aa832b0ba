import functools
import time


def performance_monitor(logger):
    """
    Time each call of the wrapped callable and log it at INFO.

    The last duration in seconds stays readable as ``wrapper.last_elapsed``,
    also when the call raised; it is None before the first call.
    """
    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            started = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                wrapper.last_elapsed = time.perf_counter() - started
                logger.info(f"{func.__name__} executed in {wrapper.last_elapsed:.4f} seconds")

        wrapper.last_elapsed = None
        return wrapper
    return decorator
