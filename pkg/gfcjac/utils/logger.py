"""
Logging utilities for GFC-Jac

Built on loguru. The library namespace is disabled on import so that callers
only see output after calling setup_logger().
"""

import sys
from pathlib import Path
from typing import Optional, Union

from loguru import logger

from gfcjac.core.errors import InputError

_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} - {extra[name]} - {level} - {message}"

_handler_ids: list = []


def setup_logger(
    name: str = "GFCJac",
    level: Union[str, int] = "INFO",
    log_file: Optional[str] = None,
):
    """
    Setup the application logger with a stderr sink and an optional file sink.

    Standard output is left alone; reports are written there.

    Args:
        name: Logger name bound into every record
        level: Logging level for the console sink
        log_file: Optional path of a DEBUG-level log file

    Returns:
        Bound loguru logger
    """
    # Avoid duplicate handlers; this also drops loguru's default sink
    logger.remove()
    _handler_ids.clear()

    logger.configure(extra={"name": name})
    try:
        _handler_ids.append(logger.add(sys.stderr, level=level, format=_FORMAT))
    except (ValueError, TypeError) as e:
        logger.remove()
        _handler_ids.clear()
        raise InputError(f"unknown log level {level!r}") from e

    if log_file:
        try:
            Path(log_file).parent.mkdir(parents=True, exist_ok=True)
            _handler_ids.append(logger.add(log_file, level="DEBUG", format=_FORMAT))
        except OSError as e:
            raise InputError(f"cannot open log file {log_file}: {e.strerror or e}") from e

    logger.enable("gfcjac")
    return logger.bind(name=name)


def get_logger(name: str = "GFCJac"):
    """
    Get a logger bound to a component name.

    Args:
        name: Component name (usually ``__name__``)

    Returns:
        Bound loguru logger
    """
    return logger.bind(name=name)
