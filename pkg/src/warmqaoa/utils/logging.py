"""
Logging configuration for warmqaoa.

Library modules only create ``logging.getLogger(__name__)`` loggers; the
command-line harness calls :func:`configure_logging` once. Log records go to
stderr because stdout carries CSV, JSON and edge-list output.
"""

import logging
import sys
from typing import Optional, TextIO

DEBUG_FORMAT = "%(asctime)s - %(levelname)s - %(name)s - %(message)s"
DEFAULT_FORMAT = "%(levelname)s: %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def configure_logging(
    level: int = logging.INFO,
    format_string: Optional[str] = None,
    stream: Optional[TextIO] = None,
) -> None:
    """
    Configure the root logger with consistent formatting.

    Args:
        level: Logging level (default: INFO)
        format_string: Optional custom format string; DEBUG runs include
            timestamps and logger names by default.
        stream: Destination stream (default: stderr)
    """
    if format_string is None:
        format_string = DEBUG_FORMAT if level == logging.DEBUG else DEFAULT_FORMAT

    logging.basicConfig(
        level=level,
        format=format_string,
        datefmt=DATE_FORMAT,
        stream=stream if stream is not None else sys.stderr,
        force=True,
    )
