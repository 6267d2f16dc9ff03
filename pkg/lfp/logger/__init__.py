"""Package that contains all logging-related configuration of this project."""

import logging
import os
from logging.config import dictConfig

from .config import build_config

logger = logging.getLogger('lfp')


def configure_logging(log_dir: str) -> None:
    """Attach the per-level file handlers to `logger`.

    Args:
        log_dir:
            Directory the `*.log` files are written to, created if it does not exist.
    """
    os.makedirs(log_dir, exist_ok=True)
    dictConfig(build_config(log_dir))


__all__ = ('logger', 'configure_logging', )
