import logging
import os
import sys
from logging.handlers import TimedRotatingFileHandler

from nutforge.core.settings import get_settings


def setup_logger(name="nutforge"):
    """Configure and return the package logger.

    Console output goes to stderr so stdout stays free for command payloads.
    A daily-rotated file is added only when NUTFORGE_LOG_DIR is set.
    """
    logger = logging.getLogger(name)

    if logger.handlers:
        return logger

    settings = get_settings()
    logger.setLevel(getattr(logging, settings.runtime.log_level, logging.WARNING))
    logger.propagate = False

    formatter = logging.Formatter(
        "[%(asctime)s] [%(levelname)s] %(message)s", datefmt="%Y-%m-%d %H:%M:%S"
    )

    log_dir = settings.runtime.log_dir
    if log_dir:
        if not os.path.exists(log_dir):
            os.makedirs(log_dir)

        file_handler = TimedRotatingFileHandler(
            filename=os.path.join(log_dir, "nutforge.log"),
            when="midnight",
            interval=1,
            backupCount=30,
            encoding="utf-8",
        )
        file_handler.setFormatter(formatter)
        file_handler.suffix = "%Y-%m-%d"
        logger.addHandler(file_handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    return logger


logger = setup_logger()
