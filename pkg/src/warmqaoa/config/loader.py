"""
Configuration loading functionality for warmqaoa.

This module provides functionality for loading and validating experiment
configuration from YAML files.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

from .models import ConfigurationError, ExperimentSpec

logger = logging.getLogger(__name__)


def load_config(
    config_path: Union[str, Path], overrides: Optional[Dict[str, Any]] = None
) -> ExperimentSpec:
    """
    Load and validate an experiment configuration from a YAML file.

    Args:
        config_path: Path to the configuration file.
        overrides: Values (typically CLI flags) that replace file entries;
            ``None`` values are ignored.

    Returns:
        ExperimentSpec: Validated configuration object.

    Raises:
        ConfigurationError: If there's an error loading or validating the config.
    """
    path = Path(config_path)

    if not path.exists():
        raise ConfigurationError("Configuration file not found")

    try:
        with path.open(encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Error parsing YAML file: {e}") from e

    if not isinstance(data, dict):
        raise ConfigurationError("Configuration must be a YAML dictionary")

    logger.debug("Loaded configuration from %s", path)
    return build_config(data, overrides)


def build_config(
    data: Dict[str, Any], overrides: Optional[Dict[str, Any]] = None
) -> ExperimentSpec:
    """
    Merge overrides into ``data`` and build a validated ExperimentSpec.

    Raises:
        ConfigurationError: If the merged configuration is invalid.
    """
    merged = dict(data)
    for key, value in (overrides or {}).items():
        if value is not None:
            merged[key] = value
    if merged.get("instance") is not None:
        merged.pop("generator", None)

    try:
        config = ExperimentSpec.from_dict(merged)
        config.validate()
        return config
    except ConfigurationError as e:
        raise ConfigurationError(f"Error loading configuration: {e}") from e
