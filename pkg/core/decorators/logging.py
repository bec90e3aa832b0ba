import functools
import inspect
import reprlib

# Parameter vectors and images would flood the log otherwise.
_short_repr = reprlib.Repr()
_short_repr.maxstring = 60
_short_repr.maxother = 60
_short_repr.maxlist = 6


def _describe_call(func, args, kwargs):
    bound = inspect.signature(func).bind(*args, **kwargs)
    shown = (f"{name}={_short_repr.repr(value)}"
             for name, value in bound.arguments.items() if name != "self")
    return f"{func.__name__}({', '.join(shown)})"


def log_execution(logger):
    """
    Log entry, success and failure of the wrapped callable at DEBUG/ERROR.

    Arguments are abbreviated and ``self`` is left out. Exceptions are
    logged and re-raised unchanged.
    """
    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            logger.debug(f"Executing {_describe_call(func, args, kwargs)}")
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                logger.error(f"{func.__name__} failed: {e}")
                raise
            logger.debug(f"{func.__name__} completed successfully")
            return result

        return wrapper
    return decorator
