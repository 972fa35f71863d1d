from __future__ import absolute_import, division, print_function

from functools import wraps

import logging
from time import monotonic


def describe_size(obj):
    """Short size summary of a sign system, arrangement or poset argument."""
    if hasattr(obj, "covectors") and hasattr(obj, "ground"):
        return "%d covectors on %d elements" % (len(obj.covectors), len(obj.ground))
    if hasattr(obj, "hyperplanes"):
        return "%d hyperplanes in dimension %d" % (len(obj.hyperplanes), obj.dimension)
    if hasattr(obj, "elements"):
        return "%d elements" % len(obj.elements)
    return type(obj).__name__


def log_call(func):
    @wraps(func)
    def log_wrapper(*args, **kwargs):
        _LOG = logging.getLogger(func.__module__)
        _LOG.debug("%s on %s kwargs: %s", func.__name__, ", ".join(describe_size(a) for a in args), kwargs)
        return func(*args, **kwargs)
    return log_wrapper


def time_call(func):
    @wraps(func)
    def timing_wrapper(*args, **kwargs):
        start = monotonic()
        result = func(*args, **kwargs)
        stop = monotonic()
        _LOG = logging.getLogger(func.__module__)
        _LOG.debug("%s on %s took: %d ms", func.__name__, describe_size(args[0]) if args else "no arguments",
                   int((stop - start) * 1000))
        return result
    return timing_wrapper


LOG_FORMAT = "[%(asctime)s] %(name)s [%(levelname)s] %(message)s"


def setup_logging(level):
    """Attach a single stderr handler to the package logger."""
    logger = logging.getLogger("comkit")
    if not any(getattr(h, "_comkit_handler", False) for h in logger.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._comkit_handler = True  # pylint: disable=protected-access
        logger.addHandler(handler)
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    logger.setLevel(level)
    return logger
