"""Identity-system JSON files: {arity, variables, identities: [[lhs, rhs], ...], idempotent}"""
import json
import logging
import os

from identities.identity_system import IdentitySystem
from utils.errors import IdentityParseError

logger = logging.getLogger(__name__)


def parse_identity_system(text: str, name: str = "") -> IdentitySystem:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise IdentityParseError(f"invalid JSON: {e.msg}", e.lineno, e.pos) from e
    if not isinstance(data, dict):
        raise IdentityParseError("identity system must be a JSON object")
    missing = [key for key in ("arity", "variables", "identities") if key not in data]
    if missing:
        raise IdentityParseError(f"missing keys {missing}")
    try:
        return IdentitySystem.from_dict(data, name)
    except (TypeError, ValueError) as e:
        raise IdentityParseError(str(e)) from e


def load_identity_system(path: str) -> IdentitySystem:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    name = os.path.splitext(os.path.basename(path))[0]
    logger.info(f"Loaded identity system {path}")
    return parse_identity_system(text, name)
