"""Helper utilities"""
import json
import logging
import os
import sys
import time
from typing import Any, Dict, Optional

import numpy as np

from config.settings import Config


def setup_logging(settings: Optional[Dict[str, Any]] = None):
    """Setup application logging

    Reports go to stdout, so log records go to stderr and, when configured,
    to a log file.
    """
    settings = settings or Config.logging_settings()

    handlers: list = [logging.StreamHandler(sys.stderr)]
    log_file = settings.get("file")
    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=getattr(logging, str(settings["level"]).upper(), logging.WARNING),
        format=settings["format"],
        handlers=handlers,
        force=True,
    )

    logger = logging.getLogger(__name__)
    logger.debug("Logging setup complete")


def dump_json(payload: Any, indent: Optional[int] = 2) -> str:
    """Canonical JSON: sorted keys and fixed separators, newline terminated"""
    separators = (",", ": ") if indent is not None else (",", ":")
    return json.dumps(payload, sort_keys=True, indent=indent,
                      separators=separators, ensure_ascii=False) + "\n"


def make_rng(seed: int) -> np.random.Generator:
    """Seeded generator used everywhere randomness is needed"""
    return np.random.default_rng(seed)


def report_envelope(kind: str, config_dict: Dict[str, Any], payload: Dict[str, Any]) -> Dict[str, Any]:
    """Wrap a report with tool version, config and seed"""
    return {
        "tool": Config.APP_CONFIG["name"],
        "version": Config.APP_CONFIG["version"],
        "kind": kind,
        "seed": config_dict.get("seed"),
        "config": config_dict,
        "report": payload,
    }


class Stopwatch:
    """Monotonic wall-clock timer with an optional deadline"""

    def __init__(self, budget_ms: Optional[int] = None):
        self.start = time.monotonic()
        self.budget_ms = budget_ms

    @property
    def elapsed_ms(self) -> float:
        return (time.monotonic() - self.start) * 1000.0

    def expired(self) -> bool:
        return self.budget_ms is not None and self.elapsed_ms > self.budget_ms
