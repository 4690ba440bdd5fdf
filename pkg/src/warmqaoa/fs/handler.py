"""
Output writers for warmqaoa.

Every file the CLI produces (instances, reports, result CSVs, statevector
dumps) goes through one of these handlers, so that ``--dry-run`` and the
overwrite prompt behave the same for every command.
"""

import logging
from pathlib import Path
from typing import Union

from ..errors import WarmQaoaError

logger = logging.getLogger(__name__)

Content = Union[str, bytes]


class FileSystemError(WarmQaoaError):
    """Raised when there's an error during file system operations."""


class FileHandler:
    """Base class for output writers."""

    def create(self, path: Path, content: Content = "") -> bool:
        """
        Write ``content`` to ``path``.

        Returns:
            bool: Whether the file was written.
        """
        raise NotImplementedError


def _write(path: Path, content: Content) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        if isinstance(content, bytes):
            path.write_bytes(content)
        else:
            path.write_text(content, encoding="utf-8")
        logger.info("Wrote %s", path)
    except OSError as e:
        raise FileSystemError(f"Error writing file {path}: {e}") from e


class DryRunFileHandler(FileHandler):
    """Handler that only logs what would be written."""

    def create(self, path: Path, content: Content = "") -> bool:
        logger.info("Would write %s (%d bytes)", path, len(content))
        if isinstance(content, str) and content:
            logger.debug("With content:\n%s", content)
        return False


class SilentFileHandler(FileHandler):
    """Handler that overwrites without prompting."""

    def create(self, path: Path, content: Content = "") -> bool:
        _write(path, content)
        return True


class InteractiveFileHandler(FileHandler):
    """Handler that asks before overwriting an existing file."""

    def create(self, path: Path, content: Content = "") -> bool:
        if path.exists():
            logger.info("File exists: %s", path)
            try:
                response = input("Overwrite? (y/N): ").strip().lower()
            except (KeyboardInterrupt, EOFError):
                logger.info("\nSkipping %s", path)
                return False

            if response != "y":
                logger.info("Skipping %s", path)
                return False

        _write(path, content)
        return True
