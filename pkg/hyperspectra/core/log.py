import logging
import sys
from pathlib import Path
from typing import Optional

from .config import settings

LOGGER_NAME = "hyperspectra"

INFO_FORMAT = '%(asctime)s [%(levelname)s] %(message)s'
DEBUG_FORMAT = '%(asctime)s [%(levelname)s] [%(module)s:%(funcName)s:%(lineno)d] %(message)s'


def setup_logging(level: Optional[str] = None, log_dir: Optional[Path] = None) -> logging.Logger:
    """
    Настройка логгера "hyperspectra".

    С каталогом логов пишет app.log (INFO) и debug.log (DEBUG), как сервис;
    без него основной обработчик идёт в stderr, чтобы stdout оставался чистым JSON.
    Повторный вызов только меняет уровень.
    """
    logger = logging.getLogger(LOGGER_NAME)
    level = (level or settings.LOG_LEVEL).upper()
    log_dir = log_dir or settings.LOG_DIR

    if getattr(logger, "_hyperspectra_configured", False):
        logger.handlers[0].setLevel(level)
        return logger

    logger.setLevel(logging.DEBUG)

    if log_dir is not None:
        log_dir = Path(log_dir)
        log_dir.mkdir(parents=True, exist_ok=True)
        app_handler: logging.Handler = logging.FileHandler(log_dir / "app.log", encoding='utf-8')
    else:
        app_handler = logging.StreamHandler(sys.stderr)
    app_handler.setLevel(level)
    app_handler.setFormatter(logging.Formatter(INFO_FORMAT))
    logger.addHandler(app_handler)

    if log_dir is not None:
        debug_handler = logging.FileHandler(log_dir / "debug.log", encoding='utf-8')
        debug_handler.setLevel(logging.DEBUG)
        debug_handler.setFormatter(logging.Formatter(DEBUG_FORMAT))
        logger.addHandler(debug_handler)

    logger._hyperspectra_configured = True
    logger.debug("Логирование успешно инициализировано")
    return logger
