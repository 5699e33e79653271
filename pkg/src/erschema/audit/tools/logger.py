"""Package logger and the decorator used on public operations."""
import functools
import logging
import os
import sys
import time

from erschema.audit import const

from .validation import load_environment_value


def get_erschema_logger() -> logging.Logger:
    """Obtain the shared package logger, configuring it on first use.

    The level is read from ``ERSCHEMA_LOG_LEVEL``. When ``ERSCHEMA_LOG_DIR``
    is set, records go to a log file inside that folder; otherwise they go to
    standard error. Standard output is reserved for rendered results.

    Returns
    -------
    logging.Logger
        Logger named ``erschema.audit``.

    """
    log = logging.getLogger(const.LOGGER_NAME)
    if log.handlers:
        return log

    level = load_environment_value(const.ENV_LOG_LEVEL, const.DEFAULT_LOG_LEVEL).upper()
    log.setLevel(getattr(logging, level, logging.WARNING))

    log_dir = load_environment_value(const.ENV_LOG_DIR, '')
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        handler = logging.FileHandler(os.path.join(log_dir, const.LOG_FILE_NAME), encoding='utf-8')
    else:
        handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(asctime)s %(levelname)s %(name)s: %(message)s'))
    log.addHandler(handler)
    log.propagate = False
    return log


def erschema_logger(func):
    """Log entry, exit and failures of the decorated callable.

    ValueError and its subclasses are logged at DEBUG; any other exception
    is logged at ERROR, its traceback at DEBUG. Both are re-raised.
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        log = get_erschema_logger()
        log.debug('Executing %s', func.__qualname__)
        start = time.perf_counter()
        try:
            result = func(*args, **kwargs)
        except ValueError as err:
            # rejected input, reported to the caller by the exception itself
            log.debug('%s rejected its input: %s', func.__qualname__, err, exc_info=True)
            raise
        except Exception as err:
            log.error('%s failed: %s', func.__qualname__, err)
            log.debug('Traceback of %s', func.__qualname__, exc_info=True)
            raise
        log.debug('Finished %s in %.4f s', func.__qualname__, time.perf_counter() - start)
        return result
    return wrapper
