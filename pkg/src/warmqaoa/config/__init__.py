"""Configuration module for warmqaoa."""

from .loader import build_config, load_config
from .models import ConfigurationError, ExperimentSpec, GeneratorConfig
from .settings import Settings, resolve_settings

__all__ = [
    "load_config",
    "build_config",
    "ExperimentSpec",
    "GeneratorConfig",
    "ConfigurationError",
    "Settings",
    "resolve_settings",
]
