"""
Utility functions for warmqaoa.
"""

from .logging import configure_logging
from .seeding import SeedLike, as_generator, derive_seed

__all__ = ["configure_logging", "SeedLike", "as_generator", "derive_seed"]
