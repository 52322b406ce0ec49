"""
GFC-Jac - Jacobian decompositions of generalized Fermat curves

Splits the Jacobian of a generalized Fermat curve of type (p, n), up to
isogeny, into Jacobians of cyclic p-gonal quotients, certified with the
Kani-Rosen criterion.
"""

from loguru import logger

__version__ = "1.0.0"
__author__ = "GFC-Jac Development Team"

from .utils.logger import setup_logger, get_logger
from .utils.config import Config

logger.disable("gfcjac")

__all__ = [
    "setup_logger",
    "get_logger",
    "Config",
    "__version__",
    "__author__"
]
