import logging
from pathlib import Path

from logger import configure_logging, logger
from logger.config import get_filter_for_handler


def _record(level: int) -> logging.LogRecord:
    return logging.LogRecord('lfp', level, __file__, 1, 'message', None, None)


def test_filter_keeps_exactly_one_level() -> None:
    keep = get_filter_for_handler(30)

    assert keep(_record(logging.WARNING))
    assert not keep(_record(logging.ERROR))
    assert not keep(_record(logging.INFO))


def test_each_level_goes_to_its_own_file(tmp_path: Path) -> None:
    log_dir = tmp_path / 'nested' / 'logs'
    configure_logging(str(log_dir))

    logger.info('layer 1 solved')
    logger.warning('solver and oracle disagree')
    logger.error('bad input')

    assert 'layer 1 solved' in (log_dir / 'info.log').read_text()
    assert (log_dir / 'warning.log').read_text().strip().endswith('WARNING - solver and oracle disagree')
    assert 'disagree' not in (log_dir / 'error.log').read_text()
    assert (log_dir / 'critical.log').read_text() == ''
