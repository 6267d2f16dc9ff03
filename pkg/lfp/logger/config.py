import logging
import os
from typing import Any, Callable, Literal


# Plain numbers: `Literal[..]` does not accept `logging.INFO` and friends.
def get_filter_for_handler(handler_level: Literal[20, 30, 40, 50]) -> Callable[[logging.LogRecord], bool]:
    """Keep a handler to records of exactly one level.

    Per-layer solve summaries land in `info.log`, solver/oracle disagreements in `warning.log`,
    rejected input in `error.log` and crashes with their traceback in `critical.log`.

    Args:
        handler_level:
            Level of the handler the filter is attached to.

    Returns:
        Filter callable accepted by `logging.Handler.addFilter`.
    """
    def filter_func(record: logging.LogRecord) -> bool:
        return record.levelno == handler_level

    return filter_func


def build_config(log_dir: str) -> dict[str, Any]:
    """Build the `dictConfig` dictionary writing one file per level into `log_dir`."""
    return {
        'version': 1,
        'disable_existing_loggers': False,

        'formatters': {
            'basic_formatter': {
                'format': '%(asctime)s %(levelname)s - %(message)s'
            }
        },

        'filters': {
            'info_filter': {'()': get_filter_for_handler, 'handler_level': 20},
            'warning_filter': {'()': get_filter_for_handler, 'handler_level': 30},
            'error_filter': {'()': get_filter_for_handler, 'handler_level': 40},
            'critical_filter': {'()': get_filter_for_handler, 'handler_level': 50},
        },

        'handlers': {
            'info_handler': {
                'level': 'INFO',
                'class': 'logging.handlers.RotatingFileHandler',
                'maxBytes': 5_000_000,
                'backupCount': 5,
                'filename': os.path.join(log_dir, 'info.log'),
                'formatter': 'basic_formatter',
                'filters': [ 'info_filter' ]
            },

            'warning_handler': {
                'level': 'WARNING',
                'class': 'logging.FileHandler',
                'filename': os.path.join(log_dir, 'warning.log'),
                'formatter': 'basic_formatter',
                'filters': [ 'warning_filter' ]
            },

            'error_handler': {
                'level': 'ERROR',
                'class': 'logging.FileHandler',
                'filename': os.path.join(log_dir, 'error.log'),
                'formatter': 'basic_formatter',
                'filters': [ 'error_filter' ]
            },

            'critical_handler': {
                'level': 'CRITICAL',
                'class': 'logging.FileHandler',
                'filename': os.path.join(log_dir, 'critical.log'),
                'formatter': 'basic_formatter',
                'filters': [ 'critical_filter' ]
            }
        },

        'loggers': {
            'lfp': {
                'level': 'INFO',
                'handlers': [ 'info_handler', 'warning_handler', 'error_handler', 'critical_handler' ]
            }
        },
    }
