"""Environment driven settings shared by the whole package

Functions:
    env_int(name, default):
        reads a positive integer from the environment
    max_vertices():
        the largest structure the library builds (ECOR_MAX_VERTICES, default 64)
    thread_count():
        the worker cap for parallel searches (ECOR_THREADS, default 1)
"""

import logging
import os


logger = logging.getLogger(__name__)


DEFAULT_MAX_VERTICES = 64



def env_int(name: str, default: int) -> int:
    """Reads a positive integer setting, falling back to the default when the
       variable is unset or malformed
    """

    raw = os.environ.get(name)
    if raw is None or raw.strip() == '':
        return default

    try:
        value = int(raw)
    except ValueError:
        logger.warning('ignoring %s=%r, not an integer', name, raw)
        return default

    if value < 1:
        logger.warning('ignoring %s=%r, must be positive', name, raw)
        return default

    return value


def max_vertices() -> int:
    return env_int('ECOR_MAX_VERTICES', DEFAULT_MAX_VERTICES)


def thread_count() -> int:
    return env_int('ECOR_THREADS', 1)
