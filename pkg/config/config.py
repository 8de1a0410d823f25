"""
Shared configuration for the weak-modularity verifier.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict

logger = logging.getLogger(__name__)

# Use absolute path relative to this file's location, not the current working directory
CONFIG_FILE = str(Path(__file__).parent / "config.json")
THREADS_ENV_VAR = "WM_VERIFY_THREADS"


def _load_config() -> Dict[str, Any]:
    if not os.path.exists(CONFIG_FILE):
        raise FileNotFoundError(
            f"Configuration file '{CONFIG_FILE}' not found. "
            "Run 'python config/create_config.py' to create it."
        )
    try:
        with open(CONFIG_FILE, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ValueError(f"Invalid JSON in configuration file '{CONFIG_FILE}': {e}")


def _resolve_threads(configured: int) -> int:
    """Apply the thread-count environment override, ignoring unusable values."""
    raw = os.environ.get(THREADS_ENV_VAR)
    if not raw:
        return configured
    try:
        threads = int(raw)
    except ValueError:
        logger.warning("Ignoring non-integer %s=%r", THREADS_ENV_VAR, raw)
        return configured
    if threads < 1:
        logger.warning("Ignoring non-positive %s=%r", THREADS_ENV_VAR, raw)
        return configured
    return threads


_config = _load_config()

# Exported Constants
MAX_VERTICES: int = _config["verification"]["max_vertices"]
THREADS: int = _resolve_threads(_config["verification"]["threads"])
REPORT_SCHEMA_VERSION: str = _config["verification"]["report_schema_version"]

DEFAULT_RANK: int = _config["lattice"]["default_rank"]
MAX_RANK: int = _config["lattice"]["max_rank"]

DEFAULT_PRIME: int = _config["building"]["default_prime"]
MAX_PRIME: int = _config["building"]["max_prime"]
BUILDING_DIMENSION: int = _config["building"]["dimension"]
NEIGHBOR_CACHE_SIZE: int = _config["building"]["neighbor_cache_size"]

EXPORT_INDENT: int = _config["export"]["indent"]
