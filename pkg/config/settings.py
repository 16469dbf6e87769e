"""
Configuration settings for homtop
"""
import os
from typing import Any, Callable, Dict, Mapping, Optional


def _parse_bool(raw: str) -> bool:
    value = raw.strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {raw!r}")


class Config:
    """Application configuration"""

    # Application Settings
    APP_CONFIG = {
        "name": "homtop",
        "version": "0.1.0",
        "env_prefix": "HOMTOP_",
    }

    # Graphs
    GRAPH_CONFIG = {
        "max_core_vertices": 8,
        "default_format": "edge-list",
        "formats": ["edge-list", "graph6"],
    }

    # Posets
    POSET_CONFIG = {
        "max_ramified_certificate_size": 6,
    }

    # Multihomomorphism posets
    MHOM_CONFIG = {
        "max_elements": 100_000,
        "max_source_vertices": 3,
        "samples": 100_000,
    }

    # Order complexes and homology
    TOPOLOGY_CONFIG = {
        "max_faces": 1_000_000,
        "max_hom_dim": 3,
    }

    # Polymorphism search
    SEARCH_CONFIG = {
        "max_classes": 2000,
        "budget_ms": 60_000,
        "max_nodes": 5_000_000,
        "default_identity": "siggers4",
        "idempotent": True,
    }

    # Runs
    RUN_CONFIG = {
        "seed": 0,
        "jobs": 1,
        "atlas_max_vertices": 5,
    }

    # Process exit codes
    EXIT_CODES = {
        "ok": 0,
        "inconsistent": 2,
        "unchecked": 3,
        "usage": 64,
        "input": 65,
        "budget": 75,
    }

    # Logging Configuration
    LOGGING_CONFIG = {
        "level": "WARNING",
        "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        "file": None,
    }

    # Environment variable suffix -> (RunConfig field, parser)
    ENV_OVERRIDES: Dict[str, tuple] = {
        "MAX_ELEMENTS": ("max_elements", int),
        "MAX_FACES": ("max_faces", int),
        "MAX_HOM_DIM": ("max_hom_dim", int),
        "BUDGET_MS": ("budget_ms", int),
        "MAX_NODES": ("max_nodes", int),
        "SAMPLES": ("samples", int),
        "SEED": ("seed", int),
        "JOBS": ("jobs", int),
        "IDENTITY": ("identity", str),
        "IDEMPOTENT": ("idempotent", _parse_bool),
    }

    @classmethod
    def env_overrides(cls, environ: Optional[Mapping[str, str]] = None) -> Dict[str, Any]:
        """Collect RunConfig overrides from HOMTOP_* environment variables.

        Raises ValueError naming the variable when a value does not parse.
        """
        environ = os.environ if environ is None else environ
        prefix = cls.APP_CONFIG["env_prefix"]
        overrides: Dict[str, Any] = {}
        for suffix, (field_name, parser) in cls.ENV_OVERRIDES.items():
            key = prefix + suffix
            if key not in environ:
                continue
            parse: Callable[[str], Any] = parser
            try:
                overrides[field_name] = parse(environ[key])
            except ValueError as e:
                raise ValueError(f"{key}: {e}") from e
        return overrides

    @classmethod
    def logging_settings(cls, environ: Optional[Mapping[str, str]] = None) -> Dict[str, Any]:
        """LOGGING_CONFIG with HOMTOP_LOG_LEVEL / HOMTOP_LOG_FILE applied"""
        environ = os.environ if environ is None else environ
        prefix = cls.APP_CONFIG["env_prefix"]
        settings = dict(cls.LOGGING_CONFIG)
        if prefix + "LOG_LEVEL" in environ:
            settings["level"] = environ[prefix + "LOG_LEVEL"].upper()
        if prefix + "LOG_FILE" in environ:
            settings["file"] = environ[prefix + "LOG_FILE"] or None
        return settings
