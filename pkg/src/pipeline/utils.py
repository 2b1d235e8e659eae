import logging
import os
from typing import Any, Dict

import yaml

from utils.ml_logging import get_logger

logger = get_logger("trianglestar.pipeline")

PIPELINE_DIR = os.path.dirname(__file__)


def load_config(config_file: str = "settings.yaml") -> Dict[str, Any]:
    """
    Read a YAML mapping: pipeline settings or a state table.

    Args:
        config_file (str): Path to the YAML file. Relative paths resolve against
                           the src/pipeline package, so "sweep/settings.yaml" works
                           from anywhere.

    Returns:
        Dict[str, Any]: The top-level mapping. Empty when the file is missing,
        unreadable, empty, or holds something other than a mapping.
    """
    if not os.path.isabs(config_file):
        config_file = os.path.abspath(os.path.join(PIPELINE_DIR, config_file))

    if not os.path.exists(config_file):
        logger.error(f"Configuration file not found: {config_file}")
        return {}

    try:
        with open(config_file, "r", encoding="utf-8") as file:
            data = yaml.safe_load(file)
    except yaml.YAMLError as yaml_error:
        logger.error(f"Error parsing YAML content in {config_file}: {yaml_error}")
        return {}
    except OSError as e:
        logger.error(f"Cannot read {config_file}: {e}")
        return {}

    if not data:
        logger.warning(f"Configuration file is empty: {config_file}")
        return {}
    if not isinstance(data, dict):
        logger.error(f"Expected a mapping at the top of {config_file}, got {type(data).__name__}")
        return {}
    return data


def pipeline_logger(config: Dict[str, Any], default_name: str) -> logging.Logger:
    """Logger named and levelled by the ``run.logging`` block of a settings file."""
    logging_config = config.get("run", {}).get("logging", {})
    return get_logger(
        name=logging_config.get("name", default_name),
        level=logging_config.get("level", "INFO"),
    )
