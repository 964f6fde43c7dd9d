"""Logging configuration for the signed difference set toolkit.

Records go to stderr; stdout carries documents and reports only.
"""

import logging
import sys
from collections.abc import Mapping

from .config import get_settings

ROOT = "signed_difference_sets"
FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def resolve_level(verbose: bool = False) -> int:
    """--verbose, then SDS_LOG_LEVEL, then the environment default."""
    if verbose:
        return logging.DEBUG
    settings = get_settings()
    if settings.log_level:
        return logging.getLevelNamesMapping()[settings.log_level]
    return logging.WARNING if settings.is_production else logging.INFO


def setup_logging(verbose: bool = False) -> None:
    """Install a single stderr handler on the root logger."""
    level = resolve_level(verbose)

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter(fmt=FORMAT, datefmt=DATE_FORMAT))
    root_logger.addHandler(console_handler)

    logging.getLogger("sentry_sdk").setLevel(logging.WARNING)
    logging.getLogger(ROOT).setLevel(level)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(f"{ROOT}.{name}")


def _render(value: object) -> str:
    # Coordinates print as (1,0) so a record stays one token per key.
    if isinstance(value, tuple):
        return "(" + ",".join(_render(v) for v in value) + ")"
    return str(value)


class StructuredLogger:
    """
    Logger that appends keyword context as ``key=value`` fields.

    Context given to bind() is repeated on every record of the bound logger,
    ahead of the per-call context.
    """

    logger: logging.Logger

    def __init__(self, name: str, context: Mapping[str, object] | None = None) -> None:
        self.name = name
        self.logger = get_logger(name)
        self.context: dict[str, object] = dict(context or {})

    def bind(self, **context: object) -> "StructuredLogger":
        """Child logger with extra persistent context."""
        return StructuredLogger(self.name, {**self.context, **context})

    def _format_message(self, message: str, **context: object) -> str:
        merged = {**self.context, **context}
        if not merged:
            return message
        fields = " | ".join(f"{k}={_render(v)}" for k, v in merged.items())
        return f"{message} | {fields}"

    def debug(self, message: str, **context: object) -> None:
        # Formatting large reports is skipped unless DEBUG is on.
        if self.logger.isEnabledFor(logging.DEBUG):
            self.logger.debug(self._format_message(message, **context))

    def info(self, message: str, **context: object) -> None:
        self.logger.info(self._format_message(message, **context))

    def warning(self, message: str, **context: object) -> None:
        self.logger.warning(self._format_message(message, **context))

    def error(self, message: str, exc_info: bool = False, **context: object) -> None:
        self.logger.error(self._format_message(message, **context), exc_info=exc_info)

    def critical(self, message: str, **context: object) -> None:
        self.logger.critical(self._format_message(message, **context), exc_info=True)
