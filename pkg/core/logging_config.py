"""Logging setup driven by application settings."""

import logging
from typing import Optional

from core.settings import settings

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: Optional[str] = None) -> None:
    """Configure the root logger once for CLI runs.

    Args:
        level: Log level name overriding ``settings.log_level``
    """
    handlers: list[logging.Handler] = [logging.StreamHandler()]
    if settings.log_file:
        settings.ensure_directories()
        handlers.append(logging.FileHandler(settings.log_file, encoding="utf-8"))

    logging.basicConfig(
        level=(level or settings.log_level).upper(),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )
