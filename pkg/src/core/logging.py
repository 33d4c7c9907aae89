"""
Structured logging on stderr.

Result rows own stdout, so every log line, development or production, goes to
stderr. Numerical context (residuals, spectra, shapes) is logged as key-value
pairs; numpy values are turned into plain Python before rendering.
"""
import logging
import sys
from typing import Any, Optional, TextIO

import numpy as np
import structlog
from structlog.types import EventDict, Processor, WrappedLogger

from src.core.config import settings


def setup_logging(level: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    """
    Configure structlog over stdlib logging; ``level`` overrides LOG_LEVEL
    """
    stream = stream or sys.stderr
    log_level = getattr(logging, (level or settings.LOG_LEVEL).upper(), logging.INFO)

    logging.basicConfig(format="%(message)s", stream=stream, level=log_level, force=True)

    if settings.ENV == "production":
        processors = _get_prod_processors()
    else:
        processors = _get_dev_processors(colors=settings.ENV == "development" and stream.isatty())

    structlog.configure(
        processors=processors,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )


def _plain_numbers(logger: WrappedLogger, method_name: str, event_dict: EventDict) -> EventDict:
    """numpy scalars become Python scalars, arrays are summarised by shape"""
    for key, value in event_dict.items():
        event_dict[key] = _plain(value)
    return event_dict


def _plain(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return f"ndarray{value.shape}"
    if isinstance(value, (list, tuple)):
        return type(value)(_plain(item) for item in value)
    return value


def _get_dev_processors(colors: bool = True) -> list[Processor]:
    """Readable console lines"""
    return [
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        _plain_numbers,
        structlog.processors.TimeStamper(fmt="%H:%M:%S"),
        structlog.dev.ConsoleRenderer(colors=colors, exception_formatter=structlog.dev.plain_traceback),
    ]


def _get_prod_processors() -> list[Processor]:
    """One JSON object per line"""
    return [
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        _plain_numbers,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.format_exc_info,
        structlog.processors.JSONRenderer(),
    ]


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    return structlog.get_logger(name)
