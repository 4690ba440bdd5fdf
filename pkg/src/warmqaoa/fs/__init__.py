"""Output writers for warmqaoa."""

from .handler import (
    DryRunFileHandler,
    FileHandler,
    FileSystemError,
    InteractiveFileHandler,
    SilentFileHandler,
)

__all__ = [
    "FileHandler",
    "FileSystemError",
    "InteractiveFileHandler",
    "SilentFileHandler",
    "DryRunFileHandler",
]
