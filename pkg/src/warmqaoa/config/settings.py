"""
Numerical settings shared by all warmqaoa modules.

Tolerances and size caps are kept in one frozen record so that the
simulator, the spectral tools and the graph oracles agree on them.
"""

import logging
import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional

from .models import ConfigurationError

logger = logging.getLogger(__name__)

MAX_QUBITS_ENV = "QWM_MAX_QUBITS"


@dataclass(frozen=True)
class Settings:
    """Tolerances and capacity limits."""

    norm_tol: float = 1e-9
    unit_tol: float = 1e-9
    entry_tol: float = 1e-12
    psd_tol: float = 1e-8
    statevector_cap: int = 20
    density_cap: int = 10
    dense_cap: int = 12
    brute_force_cap: int = 24
    karloff_vertex_cap: int = 10_000

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """
        Build settings, applying the ``QWM_MAX_QUBITS`` override.

        The override replaces the statevector, density-matrix and dense
        caps with a single qubit count.

        Args:
            environ: Mapping to read from (default: ``os.environ``).

        Raises:
            ConfigurationError: If the override is not a positive integer.
        """
        env = os.environ if environ is None else environ
        settings = cls()
        raw = env.get(MAX_QUBITS_ENV)
        if raw is None or raw == "":
            return settings
        try:
            cap = int(raw)
        except ValueError as e:
            raise ConfigurationError(
                f"{MAX_QUBITS_ENV} must be an integer, got {raw!r}"
            ) from e
        if cap < 1:
            raise ConfigurationError(f"{MAX_QUBITS_ENV} must be positive")
        logger.debug("Qubit caps overridden to %d by %s", cap, MAX_QUBITS_ENV)
        return replace(settings, statevector_cap=cap, density_cap=cap, dense_cap=cap)


def resolve_settings(settings: Optional[Settings] = None) -> Settings:
    """Return ``settings`` or the environment-derived defaults."""
    return settings if settings is not None else Settings.from_env()
