"""
Configuration loading
Values from config.yaml are merged over the built-in defaults
"""

import copy
import logging
import os
from typing import Any, Dict, Optional

import yaml

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'config.yaml')

DEFAULTS: Dict[str, Any] = {
    'logging': {'level': 'INFO'},
    'endotactic': {'max_hyperplanes': 20},
    'realization': {'mode': 'auto', 'kappa_fraction': '1/2', 'probe_trials': 20},
    'simulation': {'tol': 1e-8, 'positivity_floor': 1e-12, 'max_step': None},
    'equivalence': {'samples': 100, 'box': [0.1, 10.0], 'seed': 0},
    'api': {'host': '0.0.0.0', 'port': 8000},
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_all_configs(path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load configuration

    Args:
        path: YAML file to read; the shipped config/config.yaml when None

    Returns:
        dict: defaults with every value found in the file applied on top
    """
    config_path = path or DEFAULT_CONFIG_PATH
    if not os.path.exists(config_path):
        logger.warning(f"{config_path} not found, using built-in defaults")
        return copy.deepcopy(DEFAULTS)

    with open(config_path, 'r', encoding='utf-8') as f:
        loaded = yaml.safe_load(f) or {}
    if not isinstance(loaded, dict):
        raise ValueError(f"{config_path} must contain a mapping at the top level")
    return _merge(DEFAULTS, loaded)
